#include "support/gen.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "bcplus/translate.hpp"

namespace bcplus::testgen {

int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

Formula randomFormula(Rng& rng, const std::vector<Atom>& atoms, int depth, bool allowImplies) {
    if (depth <= 0 || chance(rng, 0.35)) {
        if (atoms.empty() || chance(rng, 0.05)) return Formula::falsity();
        return Formula::atom(atoms[pick(rng, 0, static_cast<int>(atoms.size()) - 1)]);
    }
    int op = pick(rng, 0, allowImplies ? 3 : 1);
    Formula l = randomFormula(rng, atoms, depth - 1, allowImplies);
    if (op == 3) return neg(l);
    Formula r = randomFormula(rng, atoms, depth - 1, allowImplies);
    switch (op) {
        case 0: return Formula::conj(l, r);
        case 1: return Formula::disj(l, r);
        default: return Formula::implies(l, r);
    }
}

Interpretation randomInterpretation(Rng& rng, const SignaturePtr& sig,
                                    const std::vector<Atom>& atoms) {
    std::vector<Atom> chosen;
    for (const Atom& a : atoms)
        if (chance(rng, 0.5)) chosen.push_back(a);
    return Interpretation(sig, std::move(chosen));
}

std::vector<Interpretation> classicalModels(const Formula& f, const SignaturePtr& sig,
                                            const std::vector<Atom>& atoms) {
    std::vector<Interpretation> out;
    const std::size_t n = atoms.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<Atom> chosen;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t(1) << i)) chosen.push_back(atoms[i]);
        Interpretation x(sig, std::move(chosen));
        if (satisfies(x, f)) out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Interpretation> minimalClassicalModels(const Formula& f, const SignaturePtr& sig,
                                                   const std::vector<Atom>& atoms) {
    std::vector<Interpretation> models = classicalModels(f, sig, atoms);
    auto isSubset = [](const Interpretation& a, const Interpretation& b) {
        return std::includes(b.atoms().begin(), b.atoms().end(), a.atoms().begin(),
                             a.atoms().end());
    };
    std::vector<Interpretation> out;
    for (const Interpretation& m : models) {
        bool minimal = true;
        for (const Interpretation& other : models)
            if (other.size() < m.size() && isSubset(other, m)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(m);
    }
    return out;
}

bool classicallyEquivalent(const Formula& a, const Formula& b, const SignaturePtr& sig) {
    std::set<Atom> atomSet = atomsOf(a);
    collectAtoms(b, atomSet);
    std::vector<Atom> atoms(atomSet.begin(), atomSet.end());
    const std::size_t n = atoms.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<Atom> chosen;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t(1) << i)) chosen.push_back(atoms[i]);
        Interpretation x(sig, std::move(chosen));
        if (satisfies(x, a) != satisfies(x, b)) return false;
    }
    return true;
}

namespace {

std::vector<std::string> randomDomain(Rng& rng) {
    int size = pick(rng, 2, 3);
    std::vector<std::string> out;
    for (int i = 1; i <= size; ++i) out.push_back(std::to_string(i));
    return out;
}

SignaturePtr randomSignature(Rng& rng, bool booleanActions) {
    while (true) {
        int n = pick(rng, 1, 3);
        std::vector<ConstantDecl> decls;
        for (int i = 0; i < n; ++i) {
            ConstantKind kind;
            int roll = pick(rng, 0, 9);
            if (roll < 5)
                kind = ConstantKind::RegularFluent;
            else if (roll < 7)
                kind = ConstantKind::StaticallyDeterminedFluent;
            else
                kind = ConstantKind::Action;
            std::vector<std::string> domain =
                (kind == ConstantKind::Action && booleanActions) ? booleanDomain()
                                                                 : randomDomain(rng);
            decls.push_back({"c" + std::to_string(i + 1), kind, domain});
        }
        // Keep the horizon-3 candidate space small enough for the suites.
        double volume = 1;
        for (const ConstantDecl& c : decls)
            volume *= std::pow(double(c.domain.size()), isFluentKind(c.kind) ? 4 : 3);
        if (volume > 30000) continue;
        return makeSignature(std::move(decls));
    }
}

std::vector<Atom> atomsOfKinds(const Signature& sig, bool fluents, bool actions,
                               bool regularOnly = false) {
    std::vector<Atom> out;
    for (const ConstantDecl& c : sig.constants()) {
        bool ok = isFluentKind(c.kind) ? fluents : actions;
        if (regularOnly && c.kind != ConstantKind::RegularFluent) ok = false;
        if (!ok) continue;
        for (const std::string& v : c.domain) out.push_back({c.name, v});
    }
    return out;
}

Formula randomLiteralConjunction(Rng& rng, const std::vector<Atom>& atoms, int maxLen) {
    int len = pick(rng, 0, maxLen);
    std::vector<Formula> parts;
    for (int i = 0; i < len && !atoms.empty(); ++i) {
        Formula a = Formula::atom(atoms[pick(rng, 0, static_cast<int>(atoms.size()) - 1)]);
        parts.push_back(chance(rng, 0.3) ? neg(a) : a);
    }
    return conjoinAll(parts);
}

}  // namespace

ActionDescription randomSimpleDescription(Rng& rng) {
    while (true) {
        SignaturePtr sig = randomSignature(rng, false);
        std::vector<Atom> fluentAtoms = atomsOfKinds(*sig, true, false);
        std::vector<Atom> regularAtoms = atomsOfKinds(*sig, true, false, true);
        std::vector<Atom> actionAtoms = atomsOfKinds(*sig, false, true);
        std::vector<Atom> allAtoms = sig->atoms();

        std::vector<CausalLaw> laws;
        int lawCount = pick(rng, 0, 6);
        for (int i = 0; i < lawCount; ++i) {
            int form = pick(rng, 0, 2);
            if (form == 0 && !fluentAtoms.empty()) {
                // static
                Formula head;
                if (chance(rng, 0.2))
                    head = Formula::falsity();
                else {
                    Formula a = Formula::atom(
                        fluentAtoms[pick(rng, 0, static_cast<int>(fluentAtoms.size()) - 1)]);
                    head = chance(rng, 0.5) ? choice(a) : a;
                }
                laws.push_back(staticLaw(head, randomLiteralConjunction(rng, fluentAtoms, 2)));
            } else if (form == 1 && !actionAtoms.empty()) {
                // action dynamic: the head must mention an action constant
                Formula a = Formula::atom(
                    actionAtoms[pick(rng, 0, static_cast<int>(actionAtoms.size()) - 1)]);
                Formula head = chance(rng, 0.6) ? choice(a) : a;
                laws.push_back(actionDynamicLaw(head, randomLiteralConjunction(rng, allAtoms, 2)));
            } else if (!regularAtoms.empty()) {
                // fluent dynamic: heads avoid statically determined constants
                Formula head;
                if (chance(rng, 0.15))
                    head = Formula::falsity();
                else {
                    Formula a = Formula::atom(
                        regularAtoms[pick(rng, 0, static_cast<int>(regularAtoms.size()) - 1)]);
                    head = chance(rng, 0.5) ? choice(a) : a;
                }
                laws.push_back(fluentDynamicLaw(head, randomLiteralConjunction(rng, fluentAtoms, 1),
                                                randomLiteralConjunction(rng, allAtoms, 2)));
            }
        }
        try {
            return ActionDescription(sig, std::move(laws));
        } catch (const ValidationError&) {
            continue;  // regenerate on a rare invalid combination
        }
    }
}

BcDescription randomBcDescription(Rng& rng) {
    while (true) {
        SignaturePtr sig = randomSignature(rng, true);
        std::vector<Atom> fluentAtoms = atomsOfKinds(*sig, true, false);
        std::vector<Atom> regularAtoms = atomsOfKinds(*sig, true, false, true);
        std::vector<Atom> bodyAtoms = fluentAtoms;
        for (const ConstantDecl& c : sig->constants())
            if (c.kind == ConstantKind::Action) bodyAtoms.push_back({c.name, "t"});

        if (fluentAtoms.empty()) continue;
        std::vector<BcLaw> laws;
        int lawCount = pick(rng, 0, 6);
        auto pickFrom = [&](const std::vector<Atom>& pool) {
            return pool[pick(rng, 0, static_cast<int>(pool.size()) - 1)];
        };
        for (int i = 0; i < lawCount; ++i) {
            BcLaw law;
            if (chance(rng, 0.5) || regularAtoms.empty()) {
                law.form = BcLaw::Form::Static;
                law.head = pickFrom(fluentAtoms);
                for (int k = pick(rng, 0, 2); k > 0; --k) law.ifAtoms.push_back(pickFrom(fluentAtoms));
            } else {
                law.form = BcLaw::Form::Dynamic;
                law.head = pickFrom(regularAtoms);
                for (int k = pick(rng, 0, 2); k > 0; --k) law.ifAtoms.push_back(pickFrom(bodyAtoms));
            }
            for (int k = pick(rng, 0, 1); k > 0; --k) law.ifconsAtoms.push_back(pickFrom(fluentAtoms));
            laws.push_back(std::move(law));
        }
        try {
            return BcDescription(sig, std::move(laws));
        } catch (const ValidationError&) {
            continue;
        }
    }
}

CplusDescription randomCplusDescription(Rng& rng) {
    while (true) {
        SignaturePtr sig = randomSignature(rng, false);
        std::vector<Atom> fluentAtoms = atomsOfKinds(*sig, true, false);
        std::vector<Atom> regularAtoms = atomsOfKinds(*sig, true, false, true);
        std::vector<Atom> actionAtoms = atomsOfKinds(*sig, false, true);
        std::vector<Atom> allAtoms = sig->atoms();

        std::vector<CausalLaw> laws;
        int lawCount = pick(rng, 0, 6);
        for (int i = 0; i < lawCount; ++i) {
            int form = pick(rng, 0, 2);
            if (form == 0 && !fluentAtoms.empty()) {
                Formula head = chance(rng, 0.2)
                                   ? Formula::falsity()
                                   : Formula::atom(fluentAtoms[pick(
                                         rng, 0, static_cast<int>(fluentAtoms.size()) - 1)]);
                laws.push_back(staticLaw(head, randomFormula(rng, fluentAtoms, 2, true)));
            } else if (form == 1 && !actionAtoms.empty()) {
                Formula head = Formula::atom(
                    actionAtoms[pick(rng, 0, static_cast<int>(actionAtoms.size()) - 1)]);
                laws.push_back(actionDynamicLaw(head, randomFormula(rng, allAtoms, 2, true)));
            } else if (!regularAtoms.empty()) {
                Formula head = chance(rng, 0.15)
                                   ? Formula::falsity()
                                   : Formula::atom(regularAtoms[pick(
                                         rng, 0, static_cast<int>(regularAtoms.size()) - 1)]);
                laws.push_back(fluentDynamicLaw(head, randomFormula(rng, fluentAtoms, 2, true),
                                                randomFormula(rng, allAtoms, 2, true)));
            }
        }
        try {
            return CplusDescription(sig, std::move(laws));
        } catch (const ValidationError&) {
            continue;
        }
    }
}

RandomPf randomPropositionalFormula(Rng& rng, int maxAtoms, int maxDepth) {
    RandomPf out;
    int n = pick(rng, 1, maxAtoms);
    std::vector<ConstantDecl> decls;
    for (int i = 0; i < n; ++i)
        decls.push_back({"p" + std::to_string(i + 1), ConstantKind::RegularFluent, booleanDomain()});
    out.sig = makeSignature(std::move(decls));
    for (const ConstantDecl& c : out.sig->constants()) out.atoms.push_back({c.name, "t"});
    out.formula = randomFormula(rng, out.atoms, maxDepth, true);
    return out;
}

std::vector<Interpretation> chainModels(const ActionDescription& d,
                                        const std::vector<Transition>& transitions, int m) {
    SignaturePtr sigM = timedSignature(*d.signature(), m);
    std::vector<Interpretation> out;

    std::vector<std::vector<const Transition*>> chains;
    for (const Transition& t : transitions) chains.push_back({&t});
    for (int step = 1; step < m; ++step) {
        std::vector<std::vector<const Transition*>> longer;
        for (const auto& chain : chains)
            for (const Transition& t : transitions)
                if (chain.back()->to == t.from) {
                    auto extended = chain;
                    extended.push_back(&t);
                    longer.push_back(std::move(extended));
                }
        chains = std::move(longer);
    }

    for (const auto& chain : chains) {
        std::vector<Atom> atoms;
        for (int i = 0; i < m; ++i) {
            for (const Atom& a : chain[i]->from.atoms()) atoms.push_back(timedAtom(i, a));
            for (const Atom& a : chain[i]->event.atoms()) atoms.push_back(timedAtom(i, a));
        }
        for (const Atom& a : chain.back()->to.atoms()) atoms.push_back(timedAtom(m, a));
        out.push_back(Interpretation(sigM, std::move(atoms)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace bcplus::testgen
