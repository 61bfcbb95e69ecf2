#include "bcplus/stable.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cctype>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bcplus {

namespace {

constexpr int kTrue = -1;
constexpr int kFalse = -2;

struct CNode {
    FormulaKind kind;
    int a = 0;  // var index for AtomRef, left child id otherwise
    int b = 0;  // right child id
};

// Formula compiled to an index-based tree over the atoms that occur in it.
// Decision order groups atoms by constant (timed constants in step order) so
// pairwise value clashes are detected as early as possible during the scan.
struct Compiled {
    SignaturePtr sig;
    std::vector<Atom> vars;
    std::map<Atom, int> varIndex;
    std::vector<CNode> nodes;
    std::vector<int> conjuncts;       // conjunction spine of the formula
    std::vector<int> pruneConjuncts;  // derived, classically entailed
};

int timedStepOf(const std::string& name) {
    std::size_t i = 0;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
    if (i > 0 && i < name.size() && name[i] == ':') return std::stoi(name.substr(0, i));
    return -1;
}

void flattenConjunction(const Formula& f, std::vector<Formula>& out) {
    if (f.kind() == FormulaKind::And) {
        flattenConjunction(f.left(), out);
        flattenConjunction(f.right(), out);
    } else {
        out.push_back(f);
    }
}

int compileNode(const Formula& f, Compiled& c) {
    switch (f.kind()) {
        case FormulaKind::Falsity:
            c.nodes.push_back({FormulaKind::Falsity, 0, 0});
            return static_cast<int>(c.nodes.size()) - 1;
        case FormulaKind::AtomRef: {
            auto it = c.varIndex.find(f.atom());
            assert(it != c.varIndex.end());
            c.nodes.push_back({FormulaKind::AtomRef, it->second, 0});
            return static_cast<int>(c.nodes.size()) - 1;
        }
        default: {
            int l = compileNode(f.left(), c);
            int r = compileNode(f.right(), c);
            c.nodes.push_back({f.kind(), l, r});
            return static_cast<int>(c.nodes.size()) - 1;
        }
    }
}

// Detects top-level conjuncts of the shape neg^2k(exactly-one-of Z), as
// produced by the uniqueness/existence lines, and derives fine-grained
// constraints from them: pairwise exclusion plus the plain existence
// disjunction. These are classical consequences of the conjunct, so using
// them to cut candidate branches never removes a model; they only let the
// scan reject a bad value pair as soon as both atoms are decided instead of
// after the whole group.
void derivePruneConjuncts(const Formula& conjunct, Compiled& c) {
    Formula f = conjunct;
    int negs = 0;
    while (isNegation(f) && !isFalsity(f.left())) {
        f = f.left();
        ++negs;
    }
    if (negs % 2 != 0) return;
    const AggregateInfo* agg = f.aggregate();
    if (!agg || !agg->lower || !agg->upper || *agg->lower != 1 || *agg->upper != 1) return;
    std::vector<int> group;
    for (const Atom& a : agg->atoms) {
        auto it = c.varIndex.find(a);
        if (it == c.varIndex.end()) return;
        group.push_back(it->second);
    }
    if (group.size() < 2) return;
    auto mkNode = [&](FormulaKind k, int a, int b) {
        c.nodes.push_back({k, a, b});
        return static_cast<int>(c.nodes.size()) - 1;
    };
    int falseId = mkNode(FormulaKind::Falsity, 0, 0);
    for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = i + 1; j < group.size(); ++j) {
            int pair = mkNode(FormulaKind::And, mkNode(FormulaKind::AtomRef, group[i], 0),
                              mkNode(FormulaKind::AtomRef, group[j], 0));
            c.pruneConjuncts.push_back(mkNode(FormulaKind::Implies, pair, falseId));
        }
    int any = mkNode(FormulaKind::AtomRef, group[0], 0);
    for (std::size_t i = 1; i < group.size(); ++i)
        any = mkNode(FormulaKind::Or, any, mkNode(FormulaKind::AtomRef, group[i], 0));
    c.pruneConjuncts.push_back(any);
}

Compiled compile(const Formula& f, const SignaturePtr& sig) {
    Compiled c;
    c.sig = sig;
    std::set<Atom> occurring = atomsOf(f);
    for (const Atom& a : occurring)
        if (sig && !sig->hasAtom(a))
            throw IllFormedFormulaError("atom " + toText(a) + " is outside the signature");

    std::map<std::pair<int, std::string>, std::vector<Atom>> groups;
    for (const Atom& a : occurring) groups[{timedStepOf(a.constant), a.constant}].push_back(a);
    for (auto& [key, atoms] : groups) {
        const ConstantDecl* decl = sig ? sig->find(key.second) : nullptr;
        if (decl) {
            std::vector<Atom> ordered;
            for (const std::string& v : decl->domain) {
                Atom a{key.second, v};
                if (std::find(atoms.begin(), atoms.end(), a) != atoms.end()) ordered.push_back(a);
            }
            atoms = std::move(ordered);
        } else {
            std::sort(atoms.begin(), atoms.end());
        }
        for (const Atom& a : atoms) {
            c.varIndex.emplace(a, static_cast<int>(c.vars.size()));
            c.vars.push_back(a);
        }
    }

    std::vector<Formula> parts;
    flattenConjunction(f, parts);
    for (const Formula& part : parts) {
        c.conjuncts.push_back(compileNode(part, c));
        derivePruneConjuncts(part, c);
    }
    return c;
}

bool evalUnderAssignment(const Compiled& c, int id, const std::vector<std::int8_t>& assign) {
    const CNode& n = c.nodes[id];
    switch (n.kind) {
        case FormulaKind::Falsity: return false;
        case FormulaKind::AtomRef: return assign[n.a] == 1;
        case FormulaKind::And:
            return evalUnderAssignment(c, n.a, assign) && evalUnderAssignment(c, n.b, assign);
        case FormulaKind::Or:
            return evalUnderAssignment(c, n.a, assign) || evalUnderAssignment(c, n.b, assign);
        case FormulaKind::Implies:
            return !evalUnderAssignment(c, n.a, assign) || evalUnderAssignment(c, n.b, assign);
    }
    return false;
}

int maxVarOf(const Compiled& c, int id) {
    const CNode& n = c.nodes[id];
    switch (n.kind) {
        case FormulaKind::Falsity: return -1;
        case FormulaKind::AtomRef: return n.a;
        default: return std::max(maxVarOf(c, n.a), maxVarOf(c, n.b));
    }
}

struct Budget {
    std::atomic<std::uint64_t> used{0};
    std::uint64_t limit = 0;
    std::atomic<bool> exceeded{false};

    bool bump(std::uint64_t n = 1) {
        if (used.fetch_add(n, std::memory_order_relaxed) + n > limit) {
            exceeded.store(true, std::memory_order_relaxed);
            return false;
        }
        return !exceeded.load(std::memory_order_relaxed);
    }
};

// ---- minimality check on the folded reduct ----
//
// For a model X the reduct F^X is materialized bottom-up with constant
// folding (unsatisfied subformulas become falsity, which then folds away
// through its parent). The folded conjuncts mention only atoms of X. An atom
// of X that the folded reduct does not mention can be dropped outright, so
// its absence decides non-minimality immediately; atoms forced true by unit
// propagation through the folded conjuncts can never be dropped; the
// remaining atoms are scanned subset-by-subset in increasing size.
class MinimalityChecker {
public:
    explicit MinimalityChecker(const Compiled& c) : c_(c) {}

    // inX: var -> whether the atom is in the candidate model.
    // pVar: var -> whether the atom is intensional.
    // xOnlyIntensional: true when every atom of x outside the compiled vars
    // is known to be outside the intensional set.
    bool isMinimal(const std::vector<std::int8_t>& inX, const std::vector<std::int8_t>& pVar,
                   Budget& budget) {
        fnodes_.clear();
        folded_.clear();
        const std::size_t nvars = c_.vars.size();
        varInFolded_.assign(nvars, 0);
        unit_.assign(nvars, 0);

        for (int root : c_.conjuncts) {
            auto [sat, id] = fold(root, inX);
            assert(sat);
            (void)sat;
            if (id != kTrue) flattenFolded(id);
        }

        // Any intensional atom of X the reduct does not mention is removable.
        for (std::size_t v = 0; v < nvars; ++v)
            if (inX[v] && pVar[v] && !varInFolded_[v]) return false;

        // Forced closure: atoms that every candidate subset must keep.
        forced_.assign(nvars, 0);
        for (std::size_t v = 0; v < nvars; ++v)
            if (unit_[v] || (inX[v] && !pVar[v] && varInFolded_[v])) forced_[v] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int id : folded_) {
                const FNode& n = fnodes_[id];
                if (n.kind != FormulaKind::Implies) continue;
                if (!certainlyTrue(n.a)) continue;
                changed |= forceAtoms(n.b);
            }
        }

        std::vector<int> free;
        for (std::size_t v = 0; v < nvars; ++v)
            if (inX[v] && pVar[v] && !forced_[v]) free.push_back(static_cast<int>(v));
        if (free.empty()) return true;

        removed_.assign(nvars, 0);
        std::vector<std::size_t> idx;
        for (std::size_t s = 1; s <= free.size(); ++s) {
            idx.assign(s, 0);
            for (std::size_t i = 0; i < s; ++i) idx[i] = i;
            while (true) {
                if (!budget.bump()) return true;  // aborted; caller rethrows
                for (std::size_t i = 0; i < s; ++i) removed_[free[idx[i]]] = 1;
                bool sat = true;
                for (int id : folded_)
                    if (!evalFolded(id)) {
                        sat = false;
                        break;
                    }
                for (std::size_t i = 0; i < s; ++i) removed_[free[idx[i]]] = 0;
                if (sat) return false;  // strictly smaller witness found
                std::size_t i = s;
                while (i > 0 && idx[i - 1] == free.size() - s + i - 1) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        return true;
    }

private:
    struct FNode {
        FormulaKind kind;
        int a = 0;
        int b = 0;
    };

    int mk(FormulaKind k, int a, int b) {
        fnodes_.push_back({k, a, b});
        return static_cast<int>(fnodes_.size()) - 1;
    }

    // Returns (satisfied by X, folded reduct id or kTrue/kFalse).
    std::pair<bool, int> fold(int id, const std::vector<std::int8_t>& inX) {
        const CNode& n = c_.nodes[id];
        switch (n.kind) {
            case FormulaKind::Falsity: return {false, kFalse};
            case FormulaKind::AtomRef:
                if (!inX[n.a]) return {false, kFalse};
                varInFolded_[n.a] = 1;
                return {true, mk(FormulaKind::AtomRef, n.a, 0)};
            case FormulaKind::And: {
                auto [ls, lf] = fold(n.a, inX);
                auto [rs, rf] = fold(n.b, inX);
                if (!ls || !rs) return {false, kFalse};
                if (lf == kTrue) return {true, rf};
                if (rf == kTrue) return {true, lf};
                return {true, mk(FormulaKind::And, lf, rf)};
            }
            case FormulaKind::Or: {
                auto [ls, lf] = fold(n.a, inX);
                auto [rs, rf] = fold(n.b, inX);
                if (!ls && !rs) return {false, kFalse};
                if (lf == kTrue || rf == kTrue) return {true, kTrue};
                if (!ls) return {true, rf};
                if (!rs) return {true, lf};
                return {true, mk(FormulaKind::Or, lf, rf)};
            }
            case FormulaKind::Implies: {
                auto [ls, lf] = fold(n.a, inX);
                if (!ls) return {true, kTrue};  // falsified body: the reduct is a tautology
                auto [rs, rf] = fold(n.b, inX);
                if (!rs) return {false, kFalse};
                if (rf == kTrue) return {true, kTrue};
                if (lf == kTrue) return {true, rf};
                return {true, mk(FormulaKind::Implies, lf, rf)};
            }
        }
        return {false, kFalse};
    }

    void flattenFolded(int id) {
        const FNode& n = fnodes_[id];
        if (n.kind == FormulaKind::And) {
            flattenFolded(n.a);
            flattenFolded(n.b);
            return;
        }
        if (n.kind == FormulaKind::AtomRef) unit_[n.a] = 1;
        folded_.push_back(id);
    }

    bool certainlyTrue(int id) const {
        const FNode& n = fnodes_[id];
        switch (n.kind) {
            case FormulaKind::AtomRef: return forced_[n.a] == 1;
            case FormulaKind::And: return certainlyTrue(n.a) && certainlyTrue(n.b);
            case FormulaKind::Or: return certainlyTrue(n.a) || certainlyTrue(n.b);
            case FormulaKind::Implies: return certainlyTrue(n.b);  // conservative
            default: return false;
        }
    }

    bool forceAtoms(int id) {
        const FNode& n = fnodes_[id];
        if (n.kind == FormulaKind::AtomRef) {
            if (forced_[n.a]) return false;
            forced_[n.a] = 1;
            return true;
        }
        if (n.kind == FormulaKind::And) {
            bool l = forceAtoms(n.a);
            bool r = forceAtoms(n.b);
            return l || r;
        }
        return false;
    }

    bool evalFolded(int id) const {
        const FNode& n = fnodes_[id];
        switch (n.kind) {
            case FormulaKind::AtomRef: return removed_[n.a] == 0;
            case FormulaKind::And: return evalFolded(n.a) && evalFolded(n.b);
            case FormulaKind::Or: return evalFolded(n.a) || evalFolded(n.b);
            case FormulaKind::Implies: return !evalFolded(n.a) || evalFolded(n.b);
            default: return false;
        }
    }

    const Compiled& c_;
    std::vector<FNode> fnodes_;
    std::vector<int> folded_;
    std::vector<std::int8_t> varInFolded_;
    std::vector<std::int8_t> unit_;
    std::vector<std::int8_t> forced_;
    std::vector<std::int8_t> removed_;
};

std::vector<std::int8_t> intensionalVars(const Compiled& c, const StableQuery& q) {
    std::vector<std::int8_t> pVar(c.vars.size(), 1);
    if (q.intensional) {
        std::set<Atom> p(q.intensional->begin(), q.intensional->end());
        for (std::size_t v = 0; v < c.vars.size(); ++v) pVar[v] = p.count(c.vars[v]) ? 1 : 0;
    }
    return pVar;
}

// ---- candidate scan ----

struct Scan {
    const Compiled& c;
    const std::vector<std::int8_t>& pVar;
    Budget& budget;
    std::vector<std::vector<int>> byTrigger;     // conjunct node ids per decision var
    std::vector<int> constantConjuncts;          // conjuncts mentioning no atom

    explicit Scan(const Compiled& comp, const std::vector<std::int8_t>& p, Budget& b)
        : c(comp), pVar(p), budget(b), byTrigger(comp.vars.size()) {
        auto place = [&](int id) {
            int t = maxVarOf(c, id);
            if (t < 0)
                constantConjuncts.push_back(id);
            else
                byTrigger[t].push_back(id);
        };
        for (int id : c.conjuncts) place(id);
        for (int id : c.pruneConjuncts) place(id);
    }

    bool constantsHold() const {
        std::vector<std::int8_t> empty;
        for (int id : constantConjuncts)
            if (!evalUnderAssignment(c, id, empty)) return false;
        return true;
    }

    void run(std::vector<std::int8_t>& assign, std::size_t depth, MinimalityChecker& mc,
             std::vector<std::vector<Atom>>& out) {
        if (!budget.bump()) return;
        if (depth == c.vars.size()) {
            if (mc.isMinimal(assign, pVar, budget)) {
                std::vector<Atom> model;
                for (std::size_t v = 0; v < c.vars.size(); ++v)
                    if (assign[v]) model.push_back(c.vars[v]);
                out.push_back(std::move(model));
            }
            return;
        }
        for (std::int8_t value : {std::int8_t(1), std::int8_t(0)}) {
            assign[depth] = value;
            bool ok = true;
            for (int id : byTrigger[depth])
                if (!evalUnderAssignment(c, id, assign)) {
                    ok = false;
                    break;
                }
            if (ok) run(assign, depth + 1, mc, out);
            if (budget.exceeded.load(std::memory_order_relaxed)) break;
        }
        assign[depth] = -1;
    }

    // Enumerates surviving assignments of the first `depth` vars.
    void prefixes(std::vector<std::int8_t>& assign, std::size_t d, std::size_t depth,
                  std::vector<std::vector<std::int8_t>>& out) {
        if (d == depth) {
            out.push_back(assign);
            return;
        }
        for (std::int8_t value : {std::int8_t(1), std::int8_t(0)}) {
            assign[d] = value;
            bool ok = true;
            for (int id : byTrigger[d])
                if (!evalUnderAssignment(c, id, assign)) {
                    ok = false;
                    break;
                }
            if (ok) prefixes(assign, d + 1, depth, out);
        }
        assign[d] = -1;
    }
};

}  // namespace

bool isStableModel(const Interpretation& x, const StableQuery& q) {
    Compiled c = compile(q.formula, q.signature);
    std::vector<std::int8_t> pVar = intensionalVars(c, q);

    std::vector<std::int8_t> inX(c.vars.size(), 0);
    for (const Atom& a : x.atoms()) {
        auto it = c.varIndex.find(a);
        if (it != c.varIndex.end()) inX[it->second] = 1;
    }
    for (int id : c.conjuncts)
        if (!evalUnderAssignment(c, id, inX)) return false;

    // Atoms of x the formula does not mention cannot be supported by any
    // reduct; if intensional, dropping one yields a smaller model of F^x.
    std::set<Atom> p;
    if (q.intensional) p.insert(q.intensional->begin(), q.intensional->end());
    for (const Atom& a : x.atoms())
        if (!c.varIndex.count(a) && (!q.intensional || p.count(a))) return false;

    Budget budget;
    budget.limit = q.options.budget;
    MinimalityChecker mc(c);
    bool minimal = mc.isMinimal(inX, pVar, budget);
    if (budget.exceeded.load()) throw BudgetExceededError(budget.limit);
    return minimal;
}

std::vector<Interpretation> stableModels(const StableQuery& q) {
    Compiled c = compile(q.formula, q.signature);
    std::vector<std::int8_t> pVar = intensionalVars(c, q);
    Budget budget;
    budget.limit = q.options.budget;
    Scan scan(c, pVar, budget);

    std::vector<std::vector<Atom>> models;
    if (scan.constantsHold()) {
        const std::size_t n = c.vars.size();
        bool ranParallel = false;
#ifdef _OPENMP
        if (q.options.parallel && n >= 18 && omp_get_max_threads() > 1) {
            const std::size_t depth = std::min<std::size_t>(n, 12);
            std::vector<std::vector<std::int8_t>> prefixes;
            std::vector<std::int8_t> seed(n, -1);
            scan.prefixes(seed, 0, depth, prefixes);
            std::vector<std::vector<std::vector<Atom>>> buckets(prefixes.size());
#pragma omp parallel
            {
                MinimalityChecker mc(c);
#pragma omp for schedule(dynamic)
                for (long i = 0; i < static_cast<long>(prefixes.size()); ++i) {
                    if (budget.exceeded.load(std::memory_order_relaxed)) continue;
                    std::vector<std::int8_t> assign = prefixes[i];
                    scan.run(assign, depth, mc, buckets[i]);
                }
            }
            for (auto& bucket : buckets)
                for (auto& m : bucket) models.push_back(std::move(m));
            ranParallel = true;
        }
#endif
        if (!ranParallel) {
            std::vector<std::int8_t> assign(n, -1);
            MinimalityChecker mc(c);
            scan.run(assign, 0, mc, models);
        }
    }
    if (budget.exceeded.load()) throw BudgetExceededError(budget.limit);

    std::vector<Interpretation> out;
    out.reserve(models.size());
    for (auto& m : models) out.emplace_back(q.signature, std::move(m));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bcplus
