#include "bcplus/query.hpp"

#include <algorithm>

#include "bcplus/translate.hpp"

namespace bcplus {

namespace {

Solution splitSolution(const ActionDescription& d, const Interpretation& model, int m) {
    Solution sol;
    sol.horizon = m;
    std::vector<std::vector<Atom>> fluents(m + 1), events(std::max(m, 0));
    for (const Atom& a : model.atoms()) {
        auto [step, base] = splitTimedConstant(a.constant);
        const ConstantDecl* c = d.signature()->find(base);
        if (!c || step < 0) continue;
        if (isFluentKind(c->kind))
            fluents[step].push_back({base, a.value});
        else
            events[step].push_back({base, a.value});
    }
    for (auto& f : fluents) sol.fluents.emplace_back(d.signature(), std::move(f));
    for (auto& e : events) sol.events.emplace_back(d.signature(), std::move(e));
    return sol;
}

std::vector<Solution> solveAtHorizon(const ActionDescription& d, const QuerySpec& q, int m,
                                     const EngineOptions& engine) {
    TimedTheory t = translate(d, m);
    std::vector<Formula> parts{t.formula()};
    for (const TimedConstraint& c : q.constraints) {
        int step = c.at.atMaxstep ? m : c.at.step;
        if (step > m)
            throw QueryError("query constraint at step " + std::to_string(step) +
                             " does not fit horizon " + std::to_string(m));
        parts.push_back(neg(neg(timestamp(c.formula, step))));
    }
    StableQuery sq{conjoinAll(parts), t.signature(), std::nullopt, engine};
    std::vector<Solution> out;
    for (const Interpretation& model : stableModels(sq)) out.push_back(splitSolution(d, model, m));
    return out;
}

}  // namespace

SolveResult solve(const ActionDescription& d, const QuerySpec& q, const SolveOptions& opts) {
    int minHorizon = 0;
    for (const TimedConstraint& c : q.constraints)
        if (!c.at.atMaxstep) minHorizon = std::max(minHorizon, c.at.step);

    SolveResult result;
    if (q.maxstep) {
        int m = *q.maxstep;
        if (minHorizon > m)
            throw QueryError("query constraint at step " + std::to_string(minHorizon) +
                             " exceeds maxstep " + std::to_string(m));
        result.horizon = m;
        result.solutions = solveAtHorizon(d, q, m, opts.engine);
        result.status = result.solutions.empty() ? SolveStatus::NoSolutionAtHorizon
                                                 : SolveStatus::SolutionsFound;
    } else {
        result.status = SolveStatus::HorizonCapExhausted;
        result.horizon = opts.horizonCap;
        for (int m = minHorizon; m <= opts.horizonCap; ++m) {
            std::vector<Solution> sols = solveAtHorizon(d, q, m, opts.engine);
            if (!sols.empty()) {
                result.status = SolveStatus::SolutionsFound;
                result.horizon = m;
                result.solutions = std::move(sols);
                break;
            }
        }
    }
    if (opts.limit > 0 && result.solutions.size() > opts.limit)
        result.solutions.resize(opts.limit);
    return result;
}

}  // namespace bcplus
