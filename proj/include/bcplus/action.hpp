#ifndef BCPLUS_ACTION_HPP
#define BCPLUS_ACTION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bcplus/formula.hpp"
#include "bcplus/signature.hpp"

namespace bcplus {

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class LawForm {
    Static,        // caused F if G          (F, G fluent formulas)
    ActionDynamic, // caused F if G          (F action formula, G any formula)
    FluentDynamic, // caused F if G after H  (F, G fluent formulas, H any formula,
                   //                         F free of statically determined constants)
};

struct CausalLaw {
    LawForm form = LawForm::Static;
    Formula head;
    Formula ifPart = truth();
    std::optional<Formula> afterPart;
    std::string surface;  // abbreviation this law came from, for diagnostics
};

CausalLaw staticLaw(Formula head, Formula ifPart = truth());
CausalLaw actionDynamicLaw(Formula head, Formula ifPart = truth());
CausalLaw fluentDynamicLaw(Formula head, Formula ifPart, Formula afterPart);

std::string toText(const CausalLaw& law);

/// Checks the syntactic provisos of the law form against the signature.
/// Returns a diagnostic naming the violated clause and offending constant,
/// or nothing when the law is well formed.
std::optional<std::string> validateLaw(const CausalLaw& law, const Signature& sig);

/// A finite set of causal laws over a signature. Laws are validated at
/// construction; an invalid law raises ValidationError.
class ActionDescription {
public:
    ActionDescription() = default;
    ActionDescription(SignaturePtr sig, std::vector<CausalLaw> laws);

    const SignaturePtr& signature() const { return sig_; }
    const std::vector<CausalLaw>& laws() const { return laws_; }

private:
    SignaturePtr sig_;
    std::vector<CausalLaw> laws_;
};

// Causal-law abbreviations. Each expands to one or more plain causal laws;
// the quantified ones produce one law per domain element.

struct DefaultLaw {      // default c=v [if F] [after G]
    Atom head;
    Formula ifPart = truth();
    std::optional<Formula> afterPart;
};
struct CausesLaw {       // c causes F [if G]   (c a Boolean action constant)
    std::string action;
    Formula effect;
    std::optional<Formula> condition;
};
struct ExogenousLaw {    // exogenous c         (c an action constant)
    std::string constant;
};
struct InertialLaw {     // inertial c          (c a regular fluent constant)
    std::string constant;
};
struct ConstraintLaw {   // constraint F        (F a fluent formula)
    Formula condition;
};
struct AlwaysLaw {       // always F
    Formula condition;
};
struct NonexecutableLaw {  // nonexecutable F [if G]
    Formula what;
    std::optional<Formula> condition;
};

using Abbreviation = std::variant<DefaultLaw, CausesLaw, ExogenousLaw, InertialLaw,
                                  ConstraintLaw, AlwaysLaw, NonexecutableLaw>;

/// Expands an abbreviation into causal laws. Throws ValidationError when the
/// abbreviation's arguments do not respect the constant kinds it requires,
/// or when an expanded law fails validation.
std::vector<CausalLaw> expandAbbreviation(const Abbreviation& ab, const Signature& sig);

struct Classification {
    bool definite = false;  // every head is falsity, an atom, or a choice of an atom
    bool simple = false;    // definite, and every body is a simple conjunction
};

/// A formula is a simple conjunction when it is a conjunction of atoms and
/// count-aggregate expressions, each possibly preceded by negations.
bool isSimpleConjunction(const Formula& f);

Classification classify(const ActionDescription& d);

}  // namespace bcplus

#endif
