#include "bcplus/translate.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace bcplus {

std::string timedConstantName(int step, const std::string& base) {
    return std::to_string(step) + ":" + base;
}

std::pair<int, std::string> splitTimedConstant(const std::string& name) {
    std::size_t i = 0;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
    if (i == 0 || i >= name.size() || name[i] != ':') return {-1, name};
    return {std::stoi(name.substr(0, i)), name.substr(i + 1)};
}

Atom timedAtom(int step, const Atom& a) {
    return {timedConstantName(step, a.constant), a.value};
}

SignaturePtr timedSignature(const Signature& base, int m) {
    std::vector<ConstantDecl> decls;
    for (int i = 0; i <= m; ++i) {
        for (const ConstantDecl& c : base.constants()) {
            if (c.kind == ConstantKind::Action && i >= m) continue;
            decls.push_back({timedConstantName(i, c.name), c.kind, c.domain});
        }
    }
    return makeSignature(std::move(decls));
}

Formula timestamp(const Formula& f, int step) {
    Formula out;
    switch (f.kind()) {
        case FormulaKind::Falsity: out = f; break;
        case FormulaKind::AtomRef: out = Formula::atom(timedAtom(step, f.atom())); break;
        case FormulaKind::And:
            out = Formula::conj(timestamp(f.left(), step), timestamp(f.right(), step));
            break;
        case FormulaKind::Or:
            out = Formula::disj(timestamp(f.left(), step), timestamp(f.right(), step));
            break;
        case FormulaKind::Implies:
            out = Formula::implies(timestamp(f.left(), step), timestamp(f.right(), step));
            break;
    }
    if (const AggregateInfo* agg = f.aggregate()) {
        AggregateInfo timed = *agg;
        for (Atom& a : timed.atoms) a = timedAtom(step, a);
        out = out.withAggregateInfo(std::move(timed));
    }
    return out;
}

Formula TimedTheory::formula() const {
    std::vector<Formula> parts;
    parts.reserve(conjuncts_.size());
    for (const TimedConjunct& c : conjuncts_) parts.push_back(c.formula);
    return conjoinAll(parts);
}

namespace {

// Degenerate truth parts are dropped, matching the displayed form of the
// translation: a law with body ⊤ contributes its head alone.
Formula bodyConj(const Formula& a, const Formula& b) {
    if (isTruth(a)) return b;
    if (isTruth(b)) return a;
    return Formula::conj(a, b);
}

Formula implyBody(const Formula& body, const Formula& head) {
    if (isTruth(body)) return head;
    return Formula::implies(body, head);
}

// One exactly-one line: falsity <- ~(1 <= {i:c=v1,...} <= 1), kept in the
// doubly negated form.
Formula uecLine(const ConstantDecl& c, int step) {
    std::vector<Atom> atoms;
    for (const std::string& v : c.domain) atoms.push_back({timedConstantName(step, c.name), v});
    Formula card = expandCardinality(1, atoms, 1);
    return Formula::implies(neg(card), Formula::falsity());
}

}  // namespace

TimedTheory translate(const ActionDescription& d, int m) {
    if (m < 0) throw std::invalid_argument("translation horizon must be nonnegative");
    const Signature& base = *d.signature();
    std::vector<TimedConjunct> out;

    const auto& laws = d.laws();
    for (std::size_t k = 0; k < laws.size(); ++k) {
        const CausalLaw& law = laws[k];
        std::string lawText = "law " + std::to_string(k + 1) + ": " +
                              (law.surface.empty() ? toText(law) : law.surface);
        switch (law.form) {
            case LawForm::Static:
                for (int i = 0; i <= m; ++i)
                    out.push_back({implyBody(timestamp(law.ifPart, i), timestamp(law.head, i)),
                                   lawText + " @ " + std::to_string(i), ConjunctKind::StaticLaw,
                                   static_cast<int>(k), i});
                break;
            case LawForm::ActionDynamic:
                for (int i = 0; i < m; ++i)
                    out.push_back({implyBody(timestamp(law.ifPart, i), timestamp(law.head, i)),
                                   lawText + " @ " + std::to_string(i), ConjunctKind::ActionDynamicLaw,
                                   static_cast<int>(k), i});
                break;
            case LawForm::FluentDynamic:
                for (int i = 0; i < m; ++i) {
                    Formula body = bodyConj(timestamp(law.ifPart, i + 1),
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

    for (int i = 0; i <= m; ++i)
        for (const ConstantDecl& c : base.constants()) {
            if (!isFluentKind(c.kind)) continue;
            out.push_back({uecLine(c, i), "value constraint " + timedConstantName(i, c.name),
                           ConjunctKind::UecFluent, -1, i});
        }
    for (int i = 0; i < m; ++i)
        for (const ConstantDecl& c : base.constants()) {
            if (c.kind != ConstantKind::Action) continue;
            out.push_back({uecLine(c, i), "value constraint " + timedConstantName(i, c.name),
                           ConjunctKind::UecAction, -1, i});
        }

    return TimedTheory(m, timedSignature(base, m), std::move(out));
}

Formula uecTimed(const Signature& base, int m) {
    std::vector<Formula> parts;
    for (int i = 0; i <= m; ++i)
        for (const ConstantDecl& c : base.constants())
            if (isFluentKind(c.kind)) parts.push_back(uecLine(c, i));
    for (int i = 0; i < m; ++i)
        for (const ConstantDecl& c : base.constants())
            if (c.kind == ConstantKind::Action) parts.push_back(uecLine(c, i));
    return conjoinAll(parts);
}

void dumpTheory(const TimedTheory& t, std::ostream& os) {
    os << "% timed theory, horizon " << t.horizon() << ", " << t.conjuncts().size()
       << " conjuncts\n";
    for (const TimedConjunct& c : t.conjuncts())
        os << toText(c.formula) << "   % " << c.provenance << "\n";
}

}  // namespace bcplus
