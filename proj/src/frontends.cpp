#include "bcplus/frontends.hpp"

namespace bcplus {

namespace {

Formula bodyConj(const Formula& a, const Formula& b) {
    if (isTruth(a)) return b;
    if (isTruth(b)) return a;
    return Formula::conj(a, b);
}

Formula implyBody(const Formula& body, const Formula& head) {
    if (isTruth(body)) return head;
    return Formula::implies(body, head);
}

// neg(neg(G)), with the degenerate truth case dropped.
Formula assumed(const Formula& g) {
    if (isTruth(g)) return truth();
    return neg(neg(g));
}

void checkBcAtom(const Atom& a, const Signature& sig, const char* where, bool allowAction,
                 bool requireRegular) {
    const ConstantDecl* c = sig.find(a.constant);
    if (!c || !sig.hasAtom(a))
        throw ValidationError(std::string(where) + ": undeclared atom " + toText(a));
    if (requireRegular && c->kind != ConstantKind::RegularFluent)
        throw ValidationError(std::string(where) + ": head atom " + toText(a) +
                              " must contain a regular fluent constant");
    if (c->kind == ConstantKind::Action) {
        if (!allowAction)
            throw ValidationError(std::string(where) + ": action atom " + toText(a) +
                                  " is not allowed here");
        if (a.value != "t")
            throw ValidationError(std::string(where) + ": action atom " + toText(a) +
                                  " must have the form a=t");
    }
}

}  // namespace

BcDescription::BcDescription(SignaturePtr sig, std::vector<BcLaw> laws)
    : sig_(std::move(sig)), laws_(std::move(laws)) {
    for (const ConstantDecl& c : sig_->constants())
        if (c.kind == ConstantKind::Action && !c.isBoolean())
            throw ValidationError("action constant '" + c.name + "' must be Boolean");
    for (const BcLaw& law : laws_) {
        if (law.form == BcLaw::Form::Static) {
            checkBcAtom(law.head, *sig_, "static law head", false, false);
            for (const Atom& a : law.ifAtoms) checkBcAtom(a, *sig_, "static law body", false, false);
        } else {
            checkBcAtom(law.head, *sig_, "dynamic law head", false, true);
            for (const Atom& a : law.ifAtoms) checkBcAtom(a, *sig_, "dynamic law body", true, false);
        }
        for (const Atom& a : law.ifconsAtoms) checkBcAtom(a, *sig_, "ifcons clause", false, false);
    }
}

ActionDescription bc2bcp(const BcDescription& d) {
    std::vector<CausalLaw> laws;
    for (const BcLaw& law : d.laws()) {
        std::vector<Formula> plain, consistent;
        for (const Atom& a : law.ifAtoms) plain.push_back(Formula::atom(a));
        for (const Atom& a : law.ifconsAtoms) consistent.push_back(neg(neg(Formula::atom(a))));
        if (law.form == BcLaw::Form::Static) {
            std::vector<Formula> body = plain;
            body.insert(body.end(), consistent.begin(), consistent.end());
            laws.push_back(staticLaw(Formula::atom(law.head), conjoinAll(body)));
        } else {
            laws.push_back(fluentDynamicLaw(Formula::atom(law.head), conjoinAll(consistent),
                                            conjoinAll(plain)));
        }
    }
    for (const ConstantDecl& c : d.signature()->constants()) {
        if (c.kind != ConstantKind::Action) continue;
        auto exo = expandAbbreviation(ExogenousLaw{c.name}, *d.signature());
        laws.insert(laws.end(), exo.begin(), exo.end());
    }
    return ActionDescription(d.signature(), std::move(laws));
}

TimedTheory pfBc(const BcDescription& d, int m) {
    if (m < 0) throw std::invalid_argument("translation horizon must be nonnegative");
    const Signature& base = *d.signature();
    std::vector<TimedConjunct> out;

    const auto& laws = d.laws();
    for (std::size_t k = 0; k < laws.size(); ++k) {
        const BcLaw& law = laws[k];
        std::string lawText = "bc law " + std::to_string(k + 1);
        if (law.form == BcLaw::Form::Static) {
            for (int i = 0; i <= m; ++i) {
                std::vector<Formula> body;
                for (const Atom& a : law.ifAtoms) body.push_back(Formula::atom(timedAtom(i, a)));
                for (const Atom& a : law.ifconsAtoms)
                    body.push_back(neg(neg(Formula::atom(timedAtom(i, a)))));
                out.push_back({implyBody(conjoinAll(body), Formula::atom(timedAtom(i, law.head))),
                               lawText + " @ " + std::to_string(i), ConjunctKind::StaticLaw,
                               static_cast<int>(k), i});
            }
        } else {
            for (int i = 0; i < m; ++i) {
                std::vector<Formula> now, next;
                for (const Atom& a : law.ifAtoms) now.push_back(Formula::atom(timedAtom(i, a)));
                for (const Atom& a : law.ifconsAtoms)
                    next.push_back(neg(neg(Formula::atom(timedAtom(i + 1, a)))));
                Formula body = bodyConj(conjoinAll(now), conjoinAll(next));
                out.push_back({implyBody(std::move(body),
                                         Formula::atom(timedAtom(i + 1, law.head))),
                               lawText + " @ " + std::to_string(i), ConjunctKind::FluentDynamicLaw,
                               static_cast<int>(k), i});
            }
        }
    }

    for (const ConstantDecl& c : base.constants()) {
        if (c.kind != ConstantKind::Action) continue;
        for (int i = 0; i < m; ++i) {
            Formula either = Formula::disj(Formula::atom({timedConstantName(i, c.name), "t"}),
                                           Formula::atom({timedConstantName(i, c.name), "f"}));
            out.push_back({std::move(either), "action value " + timedConstantName(i, c.name),
                           ConjunctKind::ActionDynamicLaw, -1, i});
        }
    }
    for (const ConstantDecl& c : base.constants()) {
        if (c.kind != ConstantKind::RegularFluent) continue;
        for (const std::string& v : c.domain) {
            Atom a{timedConstantName(0, c.name), v};
            out.push_back({choice(Formula::atom(a)), "initial choice {" + toText(a) + "}",
                           ConjunctKind::InitialChoice, -1, 0});
        }
    }
    SignaturePtr sigM = timedSignature(base, m);
    for (const ConstantDecl& c : sigM->constants()) {
        auto [step, name] = splitTimedConstant(c.name);
        out.push_back({uecForConstant(c), "value constraint " + c.name,
                       isFluentKind(c.kind) ? ConjunctKind::UecFluent : ConjunctKind::UecAction,
                       -1, step});
    }
    return TimedTheory(m, sigM, std::move(out));
}

std::vector<State> bcStates(const BcDescription& d, const EngineOptions& opts) {
    TimedTheory t = pfBc(d, 0);
    StableQuery q{t.formula(), t.signature(), std::nullopt, opts};
    std::vector<State> out;
    for (const Interpretation& x : stableModels(q)) {
        std::vector<Atom> atoms;
        for (const Atom& a : x.atoms()) {
            auto [step, name] = splitTimedConstant(a.constant);
            (void)step;
            atoms.push_back({name, a.value});
        }
        out.push_back(Interpretation(d.signature(), std::move(atoms)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<Transition> transitionsFromTheory(const SignaturePtr& baseSig, const TimedTheory& t,
                                              const EngineOptions& opts) {
    StableQuery q{t.formula(), t.signature(), std::nullopt, opts};
    std::vector<Transition> out;
    for (const Interpretation& x : stableModels(q)) {
        std::vector<Atom> from, event, to;
        for (const Atom& a : x.atoms()) {
            auto [step, name] = splitTimedConstant(a.constant);
            const ConstantDecl* c = baseSig->find(name);
            if (!c) continue;
            if (isFluentKind(c->kind))
                (step == 0 ? from : to).push_back({name, a.value});
            else
                event.push_back({name, a.value});
        }
        out.push_back({Interpretation(baseSig, std::move(from)),
                       Interpretation(baseSig, std::move(event)),
                       Interpretation(baseSig, std::move(to))});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Transition> bcTransitions(const BcDescription& d, const EngineOptions& opts) {
    return transitionsFromTheory(d.signature(), pfBc(d, 1), opts);
}

CplusDescription::CplusDescription(SignaturePtr sig, std::vector<CausalLaw> laws)
    : sig_(std::move(sig)), laws_(std::move(laws)) {
    for (std::size_t i = 0; i < laws_.size(); ++i)
        if (auto diag = validateLaw(laws_[i], *sig_))
            throw ValidationError("law " + std::to_string(i + 1) + ": " + *diag);
}

bool CplusDescription::definite() const {
    for (const CausalLaw& law : laws_)
        if (!isFalsity(law.head) && law.head.kind() != FormulaKind::AtomRef) return false;
    return true;
}

ActionDescription cp2bcp(const CplusDescription& d) {
    if (!d.definite())
        throw NondefiniteError("the embedding is defined for definite descriptions only");
    std::vector<CausalLaw> laws;
    for (const CausalLaw& law : d.laws()) {
        CausalLaw rewritten = law;
        rewritten.ifPart = neg(neg(law.ifPart));
        laws.push_back(std::move(rewritten));
    }
    return ActionDescription(d.signature(), std::move(laws));
}

TimedTheory pfCplus(const CplusDescription& d, int m) {
    if (m < 0) throw std::invalid_argument("translation horizon must be nonnegative");
    if (!d.definite())
        throw NondefiniteError("the reference translation is defined for definite descriptions only");
    const Signature& base = *d.signature();
    std::vector<TimedConjunct> out;

    const auto& laws = d.laws();
    for (std::size_t k = 0; k < laws.size(); ++k) {
        const CausalLaw& law = laws[k];
        std::string lawText = "c+ law " + std::to_string(k + 1);
        switch (law.form) {
            case LawForm::Static:
                for (int i = 0; i <= m; ++i)
                    out.push_back({implyBody(assumed(timestamp(law.ifPart, i)),
                                             timestamp(law.head, i)),
                                   lawText + " @ " + std::to_string(i), ConjunctKind::StaticLaw,
                                   static_cast<int>(k), i});
                break;
            case LawForm::ActionDynamic:
                for (int i = 0; i < m; ++i)
                    out.push_back({implyBody(assumed(timestamp(law.ifPart, i)),
                                             timestamp(law.head, i)),
                                   lawText + " @ " + std::to_string(i), ConjunctKind::ActionDynamicLaw,
                                   static_cast<int>(k), i});
                break;
            case LawForm::FluentDynamic:
                for (int i = 0; i < m; ++i) {
                    Formula body = bodyConj(assumed(timestamp(law.ifPart, i + 1)),
                                            timestamp(*law.afterPart, i));
                    out.push_back({implyBody(std::move(body), timestamp(law.head, i + 1)),
                                   lawText + " @ " + std::to_string(i), ConjunctKind::FluentDynamicLaw,
                                   static_cast<int>(k), i});
                }
                break;
        }
    }

    for (const ConstantDecl& c : base.constants()) {
        if (c.kind != ConstantKind::RegularFluent) continue;
        for (const std::string& v : c.domain) {
            Atom a{timedConstantName(0, c.name), v};
            out.push_back({choice(Formula::atom(a)), "initial choice {" + toText(a) + "}",
                           ConjunctKind::InitialChoice, -1, 0});
        }
    }
    SignaturePtr sigM = timedSignature(base, m);
    for (const ConstantDecl& c : sigM->constants()) {
        auto [step, name] = splitTimedConstant(c.name);
        out.push_back({uecForConstant(c), "value constraint " + c.name,
                       isFluentKind(c.kind) ? ConjunctKind::UecFluent : ConjunctKind::UecAction,
                       -1, step});
    }
    return TimedTheory(m, sigM, std::move(out));
}

std::vector<State> cplusStates(const CplusDescription& d, const EngineOptions& opts) {
    TimedTheory t = pfCplus(d, 0);
    StableQuery q{t.formula(), t.signature(), std::nullopt, opts};
    std::vector<State> out;
    for (const Interpretation& x : stableModels(q)) {
        std::vector<Atom> atoms;
        for (const Atom& a : x.atoms()) {
            auto [step, name] = splitTimedConstant(a.constant);
            (void)step;
            atoms.push_back({name, a.value});
        }
        out.push_back(Interpretation(d.signature(), std::move(atoms)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Transition> cplusTransitions(const CplusDescription& d, const EngineOptions& opts) {
    return transitionsFromTheory(d.signature(), pfCplus(d, 1), opts);
}

ActionDescription pf2bcp(const Formula& f, const Signature& sig) {
    std::vector<ConstantDecl> decls;
    for (const ConstantDecl& c : sig.constants()) {
        if (!c.isBoolean())
            throw ValidationError("pf2bcp expects a signature of Boolean constants, '" + c.name +
                                  "' is not");
        decls.push_back({c.name, ConstantKind::StaticallyDeterminedFluent, c.domain});
    }
    SignaturePtr reclassified = makeSignature(std::move(decls));

    std::vector<CausalLaw> laws;
    laws.push_back(staticLaw(f));
    for (const ConstantDecl& c : reclassified->constants()) {
        auto def = expandAbbreviation(DefaultLaw{{c.name, "f"}, truth(), std::nullopt},
                                      *reclassified);
        laws.insert(laws.end(), def.begin(), def.end());
    }
    return ActionDescription(reclassified, std::move(laws));
}

}  // namespace bcplus
