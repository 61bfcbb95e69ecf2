#ifndef BCPLUS_FRONTENDS_HPP
#define BCPLUS_FRONTENDS_HPP

#include <stdexcept>
#include <vector>

#include "bcplus/action.hpp"
#include "bcplus/stable.hpp"
#include "bcplus/transition.hpp"
#include "bcplus/translate.hpp"

namespace bcplus {

// ---- language BC ----
//
// BC laws carry atom lists instead of formulas and distinguish `if` from
// `ifcons` clauses; action constants are Boolean. The reference translation
// pfBc fixes the semantics; bc2bcp embeds BC descriptions into the richer
// language, and the two routes must describe identical transition systems.

struct BcLaw {
    enum class Form { Static, Dynamic };
    Form form = Form::Static;
    Atom head;
    std::vector<Atom> ifAtoms;
    std::vector<Atom> ifconsAtoms;
};

class BcDescription {
public:
    BcDescription() = default;
    BcDescription(SignaturePtr sig, std::vector<BcLaw> laws);

    const SignaturePtr& signature() const { return sig_; }
    const std::vector<BcLaw>& laws() const { return laws_; }

private:
    SignaturePtr sig_;
    std::vector<BcLaw> laws_;
};

/// Embedding into causal laws: plain body atoms stay, ifcons atoms get
/// double negation, actions become exogenous.
ActionDescription bc2bcp(const BcDescription& d);

/// Literal reference translation of a BC description.
TimedTheory pfBc(const BcDescription& d, int m);

std::vector<State> bcStates(const BcDescription& d, const EngineOptions& opts = {});
std::vector<Transition> bcTransitions(const BcDescription& d, const EngineOptions& opts = {});

// ---- definite C+ ----
//
// C+ causal laws share the shape of the native ones; a description is
// definite when every head is falsity or an atom. The embedding wraps `if`
// parts in double negation; it is undefined for nondefinite descriptions.

class NondefiniteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CplusDescription {
public:
    CplusDescription() = default;
    CplusDescription(SignaturePtr sig, std::vector<CausalLaw> laws);

    const SignaturePtr& signature() const { return sig_; }
    const std::vector<CausalLaw>& laws() const { return laws_; }
    bool definite() const;

private:
    SignaturePtr sig_;
    std::vector<CausalLaw> laws_;
};

/// Throws NondefiniteError when some head is neither falsity nor an atom.
ActionDescription cp2bcp(const CplusDescription& d);

/// Literal reference translation of a definite C+ description.
TimedTheory pfCplus(const CplusDescription& d, int m);

std::vector<State> cplusStates(const CplusDescription& d, const EngineOptions& opts = {});
std::vector<Transition> cplusTransitions(const CplusDescription& d, const EngineOptions& opts = {});

// ---- propositional formulas ----

/// Embeds a propositional formula: every constant of the signature is
/// reclassified as a Boolean statically determined fluent, the formula
/// becomes one static law, and every constant defaults to f. The states of
/// the result correspond to the stable models of the formula.
ActionDescription pf2bcp(const Formula& f, const Signature& sig);

}  // namespace bcplus

#endif
