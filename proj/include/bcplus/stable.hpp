#ifndef BCPLUS_STABLE_HPP
#define BCPLUS_STABLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bcplus/formula.hpp"
#include "bcplus/signature.hpp"

namespace bcplus {

class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(std::uint64_t limit)
        : std::runtime_error("stable-model search exceeded the candidate budget (limit " +
                             std::to_string(limit) + ")"),
          limit_(limit) {}
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
};

struct EngineOptions {
    /// Cap on candidate visits (search nodes plus minimality probes).
    std::uint64_t budget = std::uint64_t(1) << 22;
    /// Allow the candidate scan to fan out over OpenMP threads. The result
    /// is merged deterministically and does not depend on the thread count.
    bool parallel = true;
};

/// A stable-model question: which interpretations are stable models of
/// `formula`, minimizing over the `intensional` atoms (all atoms when unset,
/// which is the standard notion; the empty list degenerates to classical
/// satisfaction).
struct StableQuery {
    Formula formula;
    SignaturePtr signature;
    std::optional<std::vector<Atom>> intensional;
    EngineOptions options;
};

/// True iff x satisfies the formula and no interpretation that agrees with x
/// outside the intensional atoms and is a proper subset of x satisfies the
/// reduct of the formula relative to x.
bool isStableModel(const Interpretation& x, const StableQuery& q);

/// All stable models, in canonical order (lexicographic over the sorted atom
/// sequences). Candidates range over subsets of the atoms occurring in the
/// formula; signature atoms that do not occur are false in every candidate,
/// since an atom absent from the formula cannot occur in a minimal model of
/// a reduct. Throws BudgetExceededError when the scan outgrows the budget.
std::vector<Interpretation> stableModels(const StableQuery& q);

/// Serial reference implementation: a plain scan of every subset of the
/// occurring atoms, checking each candidate against the literal reduct from
/// formula-core. Kept as the ground truth the production kernel is tested
/// and benchmarked against; usable only at small atom counts.
namespace ref {

bool isStableModel(const Interpretation& x, const StableQuery& q);
std::vector<Interpretation> stableModels(const StableQuery& q);

}  // namespace ref

}  // namespace bcplus

#endif
