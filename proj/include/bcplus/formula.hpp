#ifndef BCPLUS_FORMULA_HPP
#define BCPLUS_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcplus/signature.hpp"

namespace bcplus {

class IllFormedFormulaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CardinalityLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FormulaKind : std::uint8_t {
    Falsity,
    AtomRef,
    And,
    Or,
    Implies,
};

/// Records that a subtree was produced by cardinality expansion. Carried as
/// metadata only: the subtree itself is an ordinary propositional formula.
struct AggregateInfo {
    std::optional<int> lower;
    std::optional<int> upper;
    std::vector<Atom> atoms;
};

/// An immutable propositional formula over atoms `c=v`, built from the
/// primitive connectives falsity, conjunction, disjunction and implication.
/// Negation, truth, equivalence and choice are definitional rewrites produced
/// eagerly by the helper constructors below, so every tree consists of the
/// five primitive node kinds only.
class Formula {
public:
    Formula() : Formula(falsity()) {}

    FormulaKind kind() const { return node_->kind; }
    const Atom& atom() const;
    Formula left() const;
    Formula right() const;
    const AggregateInfo* aggregate() const { return node_->agg.get(); }

    static Formula falsity();
    static Formula atom(Atom a);
    static Formula conj(Formula l, Formula r);
    static Formula disj(Formula l, Formula r);
    static Formula implies(Formula l, Formula r);

    Formula withAggregateInfo(AggregateInfo info) const;

private:
    struct Node {
        FormulaKind kind;
        Atom at;                       // AtomRef only
        std::shared_ptr<const Node> l;  // binary kinds
        std::shared_ptr<const Node> r;
        std::shared_ptr<const AggregateInfo> agg;  // optional metadata
    };

    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;

    friend bool structurallyEqual(const Formula&, const Formula&);
};

// Derived forms (definitional rewrites, expanded eagerly).
Formula neg(Formula f);                 // F -> falsity
Formula truth();                        // falsity -> falsity
Formula iff(Formula f, Formula g);      // (F->G) & (G->F)
Formula choice(Formula f);              // F | ~F

/// Folds a list into a conjunction; empty list yields truth.
Formula conjoinAll(const std::vector<Formula>& fs);
/// Folds a list into a disjunction; empty list yields falsity.
Formula disjoinAll(const std::vector<Formula>& fs);

bool isFalsity(const Formula& f);
bool isTruth(const Formula& f);      // the literal falsity->falsity tree
bool isNegation(const Formula& f);   // any F->falsity tree
/// Structural equality on the primitive tree; aggregate metadata is ignored.
bool structurallyEqual(const Formula& a, const Formula& b);

void collectAtoms(const Formula& f, std::set<Atom>& out);
std::set<Atom> atomsOf(const Formula& f);

/// Classical satisfaction. Throws IllFormedFormulaError if the formula
/// mentions an atom outside the interpretation's signature.
class Interpretation;
bool satisfies(const Interpretation& i, const Formula& f);

/// The reduct of f relative to x: every maximal subformula not satisfied by
/// x is replaced by falsity; satisfied nodes are rebuilt with reduced
/// children. The input is unchanged.
Formula reduct(const Formula& f, const Interpretation& x);

/// Cardinality expansion. `lower <= Z` is the disjunction over all
/// lower-element subsets of the conjunctions of their atoms; `Z <= upper` is
/// ~((upper+1) <= Z); both bounds conjoin the two parts. The result carries
/// AggregateInfo metadata on its root. `subsetLimit` caps the number of
/// generated subsets.
Formula expandCardinality(std::optional<int> lower, const std::vector<Atom>& atoms,
                          std::optional<int> upper, std::size_t subsetLimit = 1000000);

/// Uniqueness and existence constraint for one constant: the pairwise
/// negated conjunctions plus the doubly negated existence disjunction. The
/// double negation is load-bearing: without it every value assignment would
/// be a stable model.
Formula uecForConstant(const ConstantDecl& c);
/// Conjunction of uecForConstant over all constants of the signature.
Formula uec(const Signature& sig);

std::string toText(const Formula& f);

/// A set of true atoms over a signature; identified with the set of atoms
/// true in it. Immutable after construction.
class Interpretation {
public:
    Interpretation() = default;
    Interpretation(SignaturePtr sig, std::vector<Atom> trueAtoms);

    bool contains(const Atom& a) const;
    const std::vector<Atom>& atoms() const { return atoms_; }  // sorted
    const SignaturePtr& signature() const { return sig_; }
    std::size_t size() const { return atoms_.size(); }

    friend bool operator==(const Interpretation& a, const Interpretation& b) {
        return a.atoms_ == b.atoms_;
    }
    /// Canonical order: lexicographic over the sorted atom sequences.
    friend bool operator<(const Interpretation& a, const Interpretation& b) {
        return a.atoms_ < b.atoms_;
    }

private:
    SignaturePtr sig_;
    std::vector<Atom> atoms_;
};

std::string toText(const Interpretation& i);

}  // namespace bcplus

#endif
