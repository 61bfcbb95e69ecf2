#include "bcplus/action.hpp"

namespace bcplus {

CausalLaw staticLaw(Formula head, Formula ifPart) {
    return {LawForm::Static, std::move(head), std::move(ifPart), std::nullopt, {}};
}

CausalLaw actionDynamicLaw(Formula head, Formula ifPart) {
    return {LawForm::ActionDynamic, std::move(head), std::move(ifPart), std::nullopt, {}};
}

CausalLaw fluentDynamicLaw(Formula head, Formula ifPart, Formula afterPart) {
    return {LawForm::FluentDynamic, std::move(head), std::move(ifPart), std::move(afterPart), {}};
}

std::string toText(const CausalLaw& law) {
    std::string out = "caused " + toText(law.head);
    if (!isTruth(law.ifPart)) out += " if " + toText(law.ifPart);
    if (law.afterPart) out += " after " + toText(*law.afterPart);
    return out;
}

namespace {

// First constant in f matching pred, or nothing.
std::optional<std::string> findConstant(const Formula& f, ConstantKind kind, const Signature& sig) {
    for (const Atom& a : atomsOf(f)) {
        const ConstantDecl* c = sig.find(a.constant);
        if (c && c->kind == kind) return c->name;
    }
    return std::nullopt;
}

std::optional<std::string> findUndeclaredAtom(const Formula& f, const Signature& sig) {
    for (const Atom& a : atomsOf(f))
        if (!sig.hasAtom(a)) return toText(a);
    return std::nullopt;
}

bool isActionFormula(const Formula& f, const Signature& sig) {
    return findConstant(f, ConstantKind::Action, sig).has_value() &&
           !findConstant(f, ConstantKind::RegularFluent, sig).has_value() &&
           !findConstant(f, ConstantKind::StaticallyDeterminedFluent, sig).has_value();
}

}  // namespace

std::optional<std::string> validateLaw(const CausalLaw& law, const Signature& sig) {
    for (const Formula* f : {&law.head, &law.ifPart}) {
        if (auto bad = findUndeclaredAtom(*f, sig)) return "undeclared atom " + *bad;
    }
    if (law.afterPart) {
        if (auto bad = findUndeclaredAtom(*law.afterPart, sig)) return "undeclared atom " + *bad;
    }

    switch (law.form) {
        case LawForm::Static: {
            if (law.afterPart) return "static law has an after part";
            if (auto c = findConstant(law.head, ConstantKind::Action, sig))
                return "action constant '" + *c + "' in the head of a static law";
            if (auto c = findConstant(law.ifPart, ConstantKind::Action, sig))
                return "action constant '" + *c + "' in the if part of a static law";
            return std::nullopt;
        }
        case LawForm::ActionDynamic: {
            if (law.afterPart) return "action dynamic law has an after part";
            if (!isActionFormula(law.head, sig)) {
                if (auto c = findConstant(law.head, ConstantKind::RegularFluent, sig))
                    return "fluent constant '" + *c + "' in the head of an action dynamic law";
                if (auto c = findConstant(law.head, ConstantKind::StaticallyDeterminedFluent, sig))
                    return "fluent constant '" + *c + "' in the head of an action dynamic law";
                return "head of an action dynamic law mentions no action constant";
            }
            return std::nullopt;
        }
        case LawForm::FluentDynamic: {
            if (!law.afterPart) return "fluent dynamic law lacks an after part";
            if (auto c = findConstant(law.head, ConstantKind::Action, sig))
                return "action constant '" + *c + "' in the head of a fluent dynamic law";
            if (auto c = findConstant(law.head, ConstantKind::StaticallyDeterminedFluent, sig))
                return "statically determined constant '" + *c +
                       "' in the head of a fluent dynamic law";
            if (auto c = findConstant(law.ifPart, ConstantKind::Action, sig))
                return "action constant '" + *c + "' in the if part of a fluent dynamic law";
            return std::nullopt;
        }
    }
    return std::nullopt;
}

ActionDescription::ActionDescription(SignaturePtr sig, std::vector<CausalLaw> laws)
    : sig_(std::move(sig)), laws_(std::move(laws)) {
    for (std::size_t i = 0; i < laws_.size(); ++i) {
        if (auto diag = validateLaw(laws_[i], *sig_)) {
            std::string where = laws_[i].surface.empty() ? toText(laws_[i]) : laws_[i].surface;
            throw ValidationError("law " + std::to_string(i + 1) + " (" + where + "): " + *diag);
        }
    }
}

namespace {

const ConstantDecl& requireConstant(const std::string& name, const Signature& sig) {
    const ConstantDecl* c = sig.find(name);
    if (!c) throw ValidationError("undeclared constant '" + name + "'");
    return *c;
}

std::vector<CausalLaw> expandDefault(const DefaultLaw& d, const Signature& sig) {
    const ConstantDecl& c = requireConstant(d.head.constant, sig);
    CausalLaw law;
    Formula head = choice(Formula::atom(d.head));
    if (d.afterPart) {
        law = fluentDynamicLaw(head, d.ifPart, *d.afterPart);
    } else if (c.kind == ConstantKind::Action) {
        law = actionDynamicLaw(head, d.ifPart);
    } else {
        law = staticLaw(head, d.ifPart);
    }
    law.surface = "default " + toText(d.head);
    return {law};
}

std::vector<CausalLaw> expandCauses(const CausesLaw& a, const Signature& sig) {
    const ConstantDecl& c = requireConstant(a.action, sig);
    if (c.kind != ConstantKind::Action || !c.isBoolean())
        throw ValidationError("'causes' requires a Boolean action constant, got '" + a.action + "'");
    Formula trigger = Formula::atom({a.action, "t"});
    Formula after = a.condition ? Formula::conj(trigger, *a.condition) : trigger;
    CausalLaw law = fluentDynamicLaw(a.effect, truth(), after);
    law.surface = a.action + " causes " + toText(a.effect);
    return {law};
}

std::vector<CausalLaw> expandExogenous(const ExogenousLaw& e, const Signature& sig) {
    const ConstantDecl& c = requireConstant(e.constant, sig);
    if (c.kind != ConstantKind::Action)
        throw ValidationError("'exogenous' requires an action constant, got '" + e.constant + "'");
    std::vector<CausalLaw> out;
    for (const std::string& v : c.domain) {
        CausalLaw law = actionDynamicLaw(choice(Formula::atom({c.name, v})));
        law.surface = "exogenous " + c.name;
        out.push_back(std::move(law));
    }
    return out;
}

std::vector<CausalLaw> expandInertial(const InertialLaw& in, const Signature& sig) {
    const ConstantDecl& c = requireConstant(in.constant, sig);
    if (c.kind != ConstantKind::RegularFluent)
        throw ValidationError("'inertial' requires a regular fluent constant, got '" + in.constant +
                              "'");
    std::vector<CausalLaw> out;
    for (const std::string& v : c.domain) {
        Atom a{c.name, v};
        CausalLaw law = fluentDynamicLaw(choice(Formula::atom(a)), truth(), Formula::atom(a));
        law.surface = "inertial " + c.name;
        out.push_back(std::move(law));
    }
    return out;
}

}  // namespace

std::vector<CausalLaw> expandAbbreviation(const Abbreviation& ab, const Signature& sig) {
    std::vector<CausalLaw> out = std::visit(
        [&](const auto& a) -> std::vector<CausalLaw> {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, DefaultLaw>) return expandDefault(a, sig);
            else if constexpr (std::is_same_v<T, CausesLaw>) return expandCauses(a, sig);
            else if constexpr (std::is_same_v<T, ExogenousLaw>) return expandExogenous(a, sig);
            else if constexpr (std::is_same_v<T, InertialLaw>) return expandInertial(a, sig);
            else if constexpr (std::is_same_v<T, ConstraintLaw>) {
                CausalLaw law = staticLaw(Formula::falsity(), neg(a.condition));
                law.surface = "constraint " + toText(a.condition);
                return {law};
            } else if constexpr (std::is_same_v<T, AlwaysLaw>) {
                CausalLaw law = fluentDynamicLaw(Formula::falsity(), truth(), neg(a.condition));
                law.surface = "always " + toText(a.condition);
                return {law};
            } else {
                static_assert(std::is_same_v<T, NonexecutableLaw>);
                Formula after = a.condition ? Formula::conj(a.what, *a.condition) : a.what;
                CausalLaw law = fluentDynamicLaw(Formula::falsity(), truth(), after);
                law.surface = "nonexecutable " + toText(a.what);
                return {law};
            }
        },
        ab);
    for (const CausalLaw& law : out)
        if (auto diag = validateLaw(law, sig))
            throw ValidationError(law.surface + ": " + *diag);
    return out;
}

namespace {

bool isChoiceOfAtom(const Formula& f) {
    if (f.kind() != FormulaKind::Or) return false;
    if (f.left().kind() != FormulaKind::AtomRef) return false;
    const Formula r = f.right();
    return isNegation(r) && r.left().kind() == FormulaKind::AtomRef &&
           r.left().atom() == f.left().atom();
}

bool isDefiniteHead(const Formula& f) {
    return isFalsity(f) || f.kind() == FormulaKind::AtomRef || isChoiceOfAtom(f);
}

bool isSimpleConjunct(Formula f) {
    // An atom or aggregate expression under any number of negations; the
    // zero-ary connectives count as degenerate conjuncts.
    while (true) {
        if (f.aggregate()) return true;
        if (f.kind() == FormulaKind::AtomRef || isFalsity(f)) return true;
        if (isNegation(f)) {
            f = f.left();
            continue;
        }
        return false;
    }
}

}  // namespace

bool isSimpleConjunction(const Formula& f) {
    if (f.kind() == FormulaKind::And && !f.aggregate())
        return isSimpleConjunction(f.left()) && isSimpleConjunction(f.right());
    return isSimpleConjunct(f);
}

Classification classify(const ActionDescription& d) {
    Classification out{true, true};
    for (const CausalLaw& law : d.laws()) {
        if (!isDefiniteHead(law.head)) out.definite = false;
        if (!isSimpleConjunction(law.ifPart)) out.simple = false;
        if (law.afterPart && !isSimpleConjunction(*law.afterPart)) out.simple = false;
    }
    out.simple = out.simple && out.definite;
    return out;
}

}  // namespace bcplus
