#ifndef BCPLUS_QUERY_HPP
#define BCPLUS_QUERY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcplus/action.hpp"
#include "bcplus/stable.hpp"

namespace bcplus {

class QueryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct StepRef {
    bool atMaxstep = false;
    int step = 0;
};

struct TimedConstraint {
    StepRef at;
    Formula formula;  // over the base signature; timestamped at solve time
};

struct QuerySpec {
    std::string label;
    std::optional<int> maxstep;  // unset: try horizons 0..cap and keep the least solvable
    std::vector<TimedConstraint> constraints;
};

/// One stable model of the constrained timed theory, split into per-step
/// fluent valuations s_0..s_m and event valuations e_0..e_{m-1}.
struct Solution {
    int horizon = 0;
    std::vector<Interpretation> fluents;
    std::vector<Interpretation> events;
};

struct SolveOptions {
    int horizonCap = 20;
    std::size_t limit = 0;  // 0 = all solutions
    EngineOptions engine;
};

enum class SolveStatus {
    SolutionsFound,
    NoSolutionAtHorizon,    // fixed maxstep, empty answer
    HorizonCapExhausted,    // unbounded maxstep, nothing up to the cap
};

struct SolveResult {
    SolveStatus status = SolveStatus::NoSolutionAtHorizon;
    int horizon = -1;  // the horizon solved (or the cap when exhausted)
    std::vector<Solution> solutions;
};

/// Conjoins the timed translation with the doubly negated query constraints
/// and enumerates stable models. Double negation makes the constraints pure
/// filters: they cannot support atoms, so every answer remains a path.
SolveResult solve(const ActionDescription& d, const QuerySpec& q, const SolveOptions& opts = {});

}  // namespace bcplus

#endif
