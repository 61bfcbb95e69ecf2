#include <algorithm>
#include <functional>
#include <set>

#include "bcplus/stable.hpp"

// Reference engine: a direct transcription of the definitions. Candidates
// are every subset of the occurring atoms; each candidate is checked with
// the literal reduct from formula-core and a subset scan in increasing size.
// No pruning, no folding, no parallelism.

namespace bcplus::ref {

namespace {

std::vector<Atom> occurringAtoms(const StableQuery& q) {
    std::set<Atom> occ = atomsOf(q.formula);
    for (const Atom& a : occ)
        if (q.signature && !q.signature->hasAtom(a))
            throw IllFormedFormulaError("atom " + toText(a) + " is outside the signature");
    return {occ.begin(), occ.end()};
}

// Applies fn to every size-s subset of items; stops early when fn returns true.
bool anySubsetOfSize(const std::vector<Atom>& items, std::size_t s,
                     const std::function<bool(const std::vector<Atom>&)>& fn) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    std::vector<Atom> subset(s);
    while (true) {
        for (std::size_t i = 0; i < s; ++i) subset[i] = items[idx[i]];
        if (fn(subset)) return true;
        std::size_t i = s;
        while (i > 0 && idx[i - 1] == items.size() - s + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool minimalAgainstReduct(const Interpretation& x, const StableQuery& q) {
    const Formula r = reduct(q.formula, x);

    std::vector<Atom> shrinkable;  // x ∩ intensional
    if (q.intensional) {
        std::set<Atom> p(q.intensional->begin(), q.intensional->end());
        for (const Atom& a : x.atoms())
            if (p.count(a)) shrinkable.push_back(a);
    } else {
        shrinkable = x.atoms();
    }

    for (std::size_t s = 1; s <= shrinkable.size(); ++s) {
        bool witness = anySubsetOfSize(shrinkable, s, [&](const std::vector<Atom>& drop) {
            std::vector<Atom> rest;
            for (const Atom& a : x.atoms())
                if (std::find(drop.begin(), drop.end(), a) == drop.end()) rest.push_back(a);
            return satisfies(Interpretation(q.signature, rest), r);
        });
        if (witness) return false;
    }
    return true;
}

}  // namespace

bool isStableModel(const Interpretation& x, const StableQuery& q) {
    if (!satisfies(x, q.formula)) return false;
    return minimalAgainstReduct(x, q);
}

std::vector<Interpretation> stableModels(const StableQuery& q) {
    std::vector<Atom> occ = occurringAtoms(q);
    if (occ.size() >= 63 || (std::uint64_t(1) << occ.size()) > q.options.budget)
        throw BudgetExceededError(q.options.budget);

    std::vector<Interpretation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << occ.size()); ++mask) {
        std::vector<Atom> atoms;
        for (std::size_t i = 0; i < occ.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) atoms.push_back(occ[i]);
        Interpretation x(q.signature, std::move(atoms));
        if (ref::isStableModel(x, q)) out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bcplus::ref
