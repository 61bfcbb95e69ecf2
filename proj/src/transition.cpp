#include "bcplus/transition.hpp"

#include <algorithm>
#include <ostream>

namespace bcplus {

namespace {

std::vector<Interpretation> timedStableModels(const ActionDescription& d, int m,
                                              const EngineOptions& opts) {
    TimedTheory t = translate(d, m);
    StableQuery q{t.formula(), t.signature(), std::nullopt, opts};
    return stableModels(q);
}

// Collects the atoms of a timed model at one step, restricted to one kind
// class, mapped back to the base signature.
Interpretation sliceAt(const ActionDescription& d, const Interpretation& timed, int step,
                       bool wantFluents) {
    std::vector<Atom> atoms;
    for (const Atom& a : timed.atoms()) {
        auto [s, base] = splitTimedConstant(a.constant);
        if (s != step) continue;
        const ConstantDecl* c = d.signature()->find(base);
        if (!c) continue;
        if (isFluentKind(c->kind) == wantFluents) atoms.push_back({base, a.value});
    }
    return Interpretation(d.signature(), std::move(atoms));
}

}  // namespace

std::vector<State> states(const ActionDescription& d, const EngineOptions& opts) {
    std::vector<State> out;
    for (const Interpretation& x : timedStableModels(d, 0, opts))
        out.push_back(sliceAt(d, x, 0, true));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Transition> transitions(const ActionDescription& d, const EngineOptions& opts) {
    std::vector<Transition> out;
    for (const Interpretation& x : timedStableModels(d, 1, opts))
        out.push_back({sliceAt(d, x, 0, true), sliceAt(d, x, 0, false), sliceAt(d, x, 1, true)});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Interpretation> paths(const ActionDescription& d, int m, const EngineOptions& opts) {
    if (m < 1) throw std::invalid_argument("paths require a horizon of at least 1");
    return timedStableModels(d, m, opts);
}

std::vector<Transition> splitPath(const ActionDescription& d, const Interpretation& timedModel,
                                  int m) {
    std::vector<Transition> out;
    for (int i = 0; i < m; ++i)
        out.push_back({sliceAt(d, timedModel, i, true), sliceAt(d, timedModel, i, false),
                       sliceAt(d, timedModel, i + 1, true)});
    return out;
}

TransitionGraph transitionGraph(const ActionDescription& d, const EngineOptions& opts) {
    return {states(d, opts), transitions(d, opts)};
}

std::string atomLabel(const Atom& a, const Signature& base) {
    const ConstantDecl* c = base.find(a.constant);
    if (c && c->isBoolean()) return a.value == "t" ? a.constant : "~" + a.constant;
    return toText(a);
}

namespace {

std::string atomsLabel(const Interpretation& i, const Signature& base) {
    std::string out;
    for (std::size_t k = 0; k < i.atoms().size(); ++k) {
        if (k) out += " ";
        out += atomLabel(i.atoms()[k], base);
    }
    return out;
}

}  // namespace

std::string interpretationLabel(const Interpretation& i, const Signature& base) {
    return "{" + atomsLabel(i, base) + "}";
}

void writeEdgeList(const TransitionGraph& g, const Signature& base, std::ostream& os) {
    for (const State& s : g.states) os << "% state " << interpretationLabel(s, base) << "\n";
    for (const Transition& t : g.transitions)
        os << interpretationLabel(t.from, base) << " --[" << atomsLabel(t.event, base)
           << "]--> " << interpretationLabel(t.to, base) << "\n";
}

void writeDot(const TransitionGraph& g, const Signature& base, std::ostream& os) {
    os << "digraph transitions {\n";
    auto nodeId = [&](const State& s) {
        auto it = std::lower_bound(g.states.begin(), g.states.end(), s);
        return "s" + std::to_string(it - g.states.begin());
    };
    for (std::size_t i = 0; i < g.states.size(); ++i)
        os << "  s" << i << " [label=\"" << interpretationLabel(g.states[i], base) << "\"];\n";
    for (const Transition& t : g.transitions)
        os << "  " << nodeId(t.from) << " -> " << nodeId(t.to) << " [label=\""
           << atomsLabel(t.event, base) << "\"];\n";
    os << "}\n";
}

}  // namespace bcplus
