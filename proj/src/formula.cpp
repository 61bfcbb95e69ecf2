#include "bcplus/formula.hpp"

#include <algorithm>
#include <cassert>

namespace bcplus {

const Atom& Formula::atom() const {
    assert(node_->kind == FormulaKind::AtomRef);
    return node_->at;
}

Formula Formula::left() const {
    assert(node_->l);
    return Formula(node_->l);
}

Formula Formula::right() const {
    assert(node_->r);
    return Formula(node_->r);
}

Formula Formula::falsity() {
    static const auto n = std::make_shared<const Node>(Node{FormulaKind::Falsity, {}, nullptr, nullptr, nullptr});
    return Formula(n);
}

Formula Formula::atom(Atom a) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::AtomRef, std::move(a), nullptr, nullptr, nullptr}));
}

Formula Formula::conj(Formula l, Formula r) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::And, {}, std::move(l.node_), std::move(r.node_), nullptr}));
}

Formula Formula::disj(Formula l, Formula r) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Or, {}, std::move(l.node_), std::move(r.node_), nullptr}));
}

Formula Formula::implies(Formula l, Formula r) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Implies, {}, std::move(l.node_), std::move(r.node_), nullptr}));
}

Formula Formula::withAggregateInfo(AggregateInfo info) const {
    auto n = std::make_shared<Node>(*node_);
    n->agg = std::make_shared<const AggregateInfo>(std::move(info));
    return Formula(std::shared_ptr<const Node>(std::move(n)));
}

Formula neg(Formula f) { return Formula::implies(std::move(f), Formula::falsity()); }

Formula truth() { return Formula::implies(Formula::falsity(), Formula::falsity()); }

Formula iff(Formula f, Formula g) {
    return Formula::conj(Formula::implies(f, g), Formula::implies(g, f));
}

Formula choice(Formula f) { return Formula::disj(f, neg(f)); }

Formula conjoinAll(const std::vector<Formula>& fs) {
    if (fs.empty()) return truth();
    Formula out = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::conj(out, fs[i]);
    return out;
}

Formula disjoinAll(const std::vector<Formula>& fs) {
    if (fs.empty()) return Formula::falsity();
    Formula out = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::disj(out, fs[i]);
    return out;
}

bool isFalsity(const Formula& f) { return f.kind() == FormulaKind::Falsity; }

bool isTruth(const Formula& f) {
    return f.kind() == FormulaKind::Implies && isFalsity(f.left()) && isFalsity(f.right());
}

bool isNegation(const Formula& f) {
    return f.kind() == FormulaKind::Implies && isFalsity(f.right());
}

bool structurallyEqual(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case FormulaKind::Falsity: return true;
        case FormulaKind::AtomRef: return a.atom() == b.atom();
        default:
            return structurallyEqual(a.left(), b.left()) && structurallyEqual(a.right(), b.right());
    }
}

void collectAtoms(const Formula& f, std::set<Atom>& out) {
    switch (f.kind()) {
        case FormulaKind::Falsity: return;
        case FormulaKind::AtomRef: out.insert(f.atom()); return;
        default:
            collectAtoms(f.left(), out);
            collectAtoms(f.right(), out);
    }
}

std::set<Atom> atomsOf(const Formula& f) {
    std::set<Atom> out;
    collectAtoms(f, out);
    return out;
}

bool satisfies(const Interpretation& i, const Formula& f) {
    switch (f.kind()) {
        case FormulaKind::Falsity: return false;
        case FormulaKind::AtomRef: {
            const Atom& a = f.atom();
            if (i.signature() && !i.signature()->hasAtom(a))
                throw IllFormedFormulaError("atom " + toText(a) + " is outside the signature");
            return i.contains(a);
        }
        case FormulaKind::And: return satisfies(i, f.left()) && satisfies(i, f.right());
        case FormulaKind::Or: return satisfies(i, f.left()) || satisfies(i, f.right());
        case FormulaKind::Implies: return !satisfies(i, f.left()) || satisfies(i, f.right());
    }
    return false;
}

Formula reduct(const Formula& f, const Interpretation& x) {
    if (!satisfies(x, f)) return Formula::falsity();
    switch (f.kind()) {
        case FormulaKind::Falsity:  // unreachable: falsity is never satisfied
        case FormulaKind::AtomRef: return f;
        case FormulaKind::And: return Formula::conj(reduct(f.left(), x), reduct(f.right(), x));
        case FormulaKind::Or: return Formula::disj(reduct(f.left(), x), reduct(f.right(), x));
        case FormulaKind::Implies:
            return Formula::implies(reduct(f.left(), x), reduct(f.right(), x));
    }
    return Formula::falsity();
}

namespace {

// Number of l-element subsets of an n-element set, saturating at limit+1.
std::size_t subsetCountCapped(std::size_t n, std::size_t l, std::size_t limit) {
    if (l > n) return 0;
    l = std::min(l, n - l);
    std::size_t count = 1;
    for (std::size_t i = 0; i < l; ++i) {
        if (count > limit) return limit + 1;
        count = count * (n - i) / (i + 1);
    }
    return count;
}

// Disjunction over all l-element subsets of the conjunctions of their atoms.
Formula expandAtLeast(int lower, const std::vector<Atom>& atoms, std::size_t subsetLimit) {
    if (lower <= 0) return truth();  // the empty subset's empty conjunction
    const std::size_t n = atoms.size();
    const std::size_t l = static_cast<std::size_t>(lower);
    if (l > n) return Formula::falsity();  // empty disjunction
    if (subsetCountCapped(n, l, subsetLimit) > subsetLimit)
        throw CardinalityLimitError("cardinality expansion exceeds the subset limit of " +
                                    std::to_string(subsetLimit) + " subsets");
    std::vector<Formula> disjuncts;
    std::vector<std::size_t> idx(l);
    for (std::size_t i = 0; i < l; ++i) idx[i] = i;
    while (true) {
        Formula term = Formula::atom(atoms[idx[0]]);
        for (std::size_t i = 1; i < l; ++i) term = Formula::conj(term, Formula::atom(atoms[idx[i]]));
        disjuncts.push_back(term);
        // next combination in lexicographic order
        std::size_t i = l;
        while (i > 0 && idx[i - 1] == n - l + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < l; ++j) idx[j] = idx[j - 1] + 1;
    }
    return disjoinAll(disjuncts);
}

}  // namespace

Formula expandCardinality(std::optional<int> lower, const std::vector<Atom>& atoms,
                          std::optional<int> upper, std::size_t subsetLimit) {
    Formula out = truth();
    if (lower && upper)
        out = Formula::conj(expandAtLeast(*lower, atoms, subsetLimit),
                            neg(expandAtLeast(*upper + 1, atoms, subsetLimit)));
    else if (lower)
        out = expandAtLeast(*lower, atoms, subsetLimit);
    else if (upper)
        out = neg(expandAtLeast(*upper + 1, atoms, subsetLimit));
    return out.withAggregateInfo({lower, upper, atoms});
}

Formula uecForConstant(const ConstantDecl& c) {
    if (c.domain.size() < 2)
        throw DeclarationError("constant '" + c.name + "' has a domain of cardinality < 2");
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < c.domain.size(); ++i)
        for (std::size_t j = i + 1; j < c.domain.size(); ++j)
            parts.push_back(neg(Formula::conj(Formula::atom({c.name, c.domain[i]}),
                                              Formula::atom({c.name, c.domain[j]}))));
    std::vector<Formula> values;
    for (const std::string& v : c.domain) values.push_back(Formula::atom({c.name, v}));
    parts.push_back(neg(neg(disjoinAll(values))));
    return conjoinAll(parts);
}

Formula uec(const Signature& sig) {
    std::vector<Formula> parts;
    for (const ConstantDecl& c : sig.constants()) parts.push_back(uecForConstant(c));
    return conjoinAll(parts);
}

namespace {

// Rendering precedence: implies < or < and < atoms. Negation and truth are
// printed via their implication patterns.
void render(const Formula& f, std::string& out, int parentPrec) {
    if (isTruth(f)) { out += "true"; return; }
    if (isNegation(f) && !isFalsity(f.left())) {
        out += "~";
        render(f.left(), out, 4);
        return;
    }
    switch (f.kind()) {
        case FormulaKind::Falsity: out += "false"; return;
        case FormulaKind::AtomRef: out += toText(f.atom()); return;
        case FormulaKind::And: {
            if (parentPrec > 3) out += "(";
            render(f.left(), out, 3);
            out += " & ";
            render(f.right(), out, 3);
            if (parentPrec > 3) out += ")";
            return;
        }
        case FormulaKind::Or: {
            if (parentPrec > 2) out += "(";
            render(f.left(), out, 2);
            out += " | ";
            render(f.right(), out, 2);
            if (parentPrec > 2) out += ")";
            return;
        }
        case FormulaKind::Implies: {
            if (parentPrec > 1) out += "(";
            render(f.left(), out, 2);
            out += " -> ";
            render(f.right(), out, 1);
            if (parentPrec > 1) out += ")";
            return;
        }
    }
}

}  // namespace

std::string toText(const Formula& f) {
    std::string out;
    render(f, out, 0);
    return out;
}

Interpretation::Interpretation(SignaturePtr sig, std::vector<Atom> trueAtoms)
    : sig_(std::move(sig)), atoms_(std::move(trueAtoms)) {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
    if (sig_) {
        for (const Atom& a : atoms_)
            if (!sig_->hasAtom(a))
                throw IllFormedFormulaError("atom " + toText(a) + " is outside the signature");
    }
}

bool Interpretation::contains(const Atom& a) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

std::string toText(const Interpretation& i) {
    std::string out = "{";
    for (std::size_t k = 0; k < i.atoms().size(); ++k) {
        if (k) out += " ";
        out += toText(i.atoms()[k]);
    }
    out += "}";
    return out;
}

}  // namespace bcplus
