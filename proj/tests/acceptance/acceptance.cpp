// Acceptance suite: runs every criterion and prints one PASS/FAIL line per
// criterion. Exits nonzero when any criterion fails.

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bcplus/driver.hpp"
#include "bcplus/frontends.hpp"
#include "bcplus/ground.hpp"
#include "bcplus/parser.hpp"
#include "bcplus/transition.hpp"
#include "support/gen.hpp"

using namespace bcplus;

namespace {

std::string cliPath, domainsDir, goldenDir;

struct Failure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    require(bool(in), "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string rstrip(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
}

std::string runCommand(const std::string& command, int* exitCode) {
    FILE* pipe = popen(command.c_str(), "r");
    require(pipe != nullptr, "cannot spawn: " + command);
    std::string out;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
    *exitCode = pclose(pipe);
    return out;
}

GroundProgram groundFile(const std::string& name, std::map<std::string, long> bindings,
                         LanguageMode mode) {
    ParseResult p = parse(slurp(domainsDir + "/" + name), mode);
    require(p.ok(), "parse failure in " + name);
    GroundResult g = ground(*p.program, bindings, mode);
    if (!g.ok()) {
        std::string detail = "grounding failure in " + name;
        for (const Diagnostic& d : g.diagnostics) detail += "; " + toText(d);
        throw Failure{detail};
    }
    return std::move(*g.program);
}

SignaturePtr exampleSignature() {
    return makeSignature({{"c", ConstantKind::RegularFluent, {"1", "2", "3"}}});
}

// ---- criteria ----

// Stable models of the opening example: F1 has exactly one stable model even
// though every value assignment is a classical model; conjoining c=2 moves
// the stable model instead of shrinking the set.
void criterion1() {
    SignaturePtr sig = exampleSignature();
    Formula f1 = Formula::conj(choice(Formula::atom({"c", "1"})), uec(*sig));
    Formula f2 = Formula::conj(f1, Formula::atom({"c", "2"}));
    Interpretation c1(sig, {{"c", "1"}});
    Interpretation c2(sig, {{"c", "2"}});
    Interpretation c3(sig, {{"c", "3"}});

    require(stableModels({f1, sig, std::nullopt, {}}) == std::vector<Interpretation>{c1},
            "stable models of F1");
    require(satisfies(c2, f1) && !isStableModel(c2, {f1, sig, std::nullopt, {}}),
            "c=2 must be a non-stable model of F1");
    require(satisfies(c3, f1) && !isStableModel(c3, {f1, sig, std::nullopt, {}}),
            "c=3 must be a non-stable model of F1");
    require(stableModels({f2, sig, std::nullopt, {}}) == std::vector<Interpretation>{c2},
            "stable models of F2");
    require(!isStableModel(c1, {f2, sig, std::nullopt, {}}), "c=1 must not be stable for F2");
}

// Dropping the double negation from the existence disjunct turns the one
// stable model into three.
void criterion2() {
    SignaturePtr sig = exampleSignature();
    std::vector<Formula> atoms;
    for (const Atom& a : sig->atoms()) atoms.push_back(Formula::atom(a));
    Formula weak = conjoinAll({neg(Formula::conj(atoms[0], atoms[1])),
                               neg(Formula::conj(atoms[0], atoms[2])),
                               neg(Formula::conj(atoms[1], atoms[2])), disjoinAll(atoms)});
    Formula f1Weak = Formula::conj(choice(Formula::atom({"c", "1"})), weak);
    std::vector<Interpretation> expected = {Interpretation(sig, {{"c", "1"}}),
                                            Interpretation(sig, {{"c", "2"}}),
                                            Interpretation(sig, {{"c", "3"}})};
    std::sort(expected.begin(), expected.end());
    require(stableModels({f1Weak, sig, std::nullopt, {}}) == expected,
            "expected exactly the three value assignments");
}

// The two-of-three count aggregate expands to the pairwise disjunction.
void criterion3() {
    SignaturePtr sig = makeSignature({{"p", ConstantKind::RegularFluent, booleanDomain()},
                                      {"q", ConstantKind::RegularFluent, booleanDomain()},
                                      {"r", ConstantKind::RegularFluent, booleanDomain()}});
    Atom p{"p", "t"}, q{"q", "t"}, r{"r", "t"};
    Formula got = expandCardinality(2, {p, q, r}, std::nullopt);
    Formula expected = disjoinAll({Formula::conj(Formula::atom(p), Formula::atom(q)),
                                   Formula::conj(Formula::atom(q), Formula::atom(r)),
                                   Formula::conj(Formula::atom(p), Formula::atom(r))});
    require(testgen::classicallyEquivalent(got, expected, sig),
            "expansion differs from the pairwise disjunction");
}

ActionDescription twoVertexDescription() {
    SignaturePtr sig = makeSignature({{"p", ConstantKind::RegularFluent, booleanDomain()},
                                      {"a", ConstantKind::Action, booleanDomain()}});
    Formula p = Formula::atom({"p", "t"}), np = Formula::atom({"p", "f"});
    Formula a = Formula::atom({"a", "t"}), na = Formula::atom({"a", "f"});
    return ActionDescription(sig, {
        fluentDynamicLaw(p, truth(), a),
        actionDynamicLaw(choice(a), truth()),
        actionDynamicLaw(choice(na), truth()),
        fluentDynamicLaw(choice(p), truth(), p),
        fluentDynamicLaw(choice(np), truth(), np),
    });
}

// States, transitions and length-2 paths of the two-vertex description,
// with the transition count checked against a brute-force triple scan.
void criterion4() {
    ActionDescription d = twoVertexDescription();
    SignaturePtr sig = d.signature();
    Interpretation sP(sig, {{"p", "t"}}), sNotP(sig, {{"p", "f"}});
    Interpretation eA(sig, {{"a", "t"}}), eNotA(sig, {{"a", "f"}});

    std::vector<State> expectedStates = {sP, sNotP};
    std::sort(expectedStates.begin(), expectedStates.end());
    require(states(d) == expectedStates, "state set mismatch");

    std::vector<Transition> ts = transitions(d);
    auto has = [&](const Transition& t) {
        return std::find(ts.begin(), ts.end(), t) != ts.end();
    };
    require(has({sNotP, eNotA, sNotP}), "missing idle transition");
    require(has({sNotP, eA, sP}), "missing effect transition");

    TimedTheory pf1 = translate(d, 1);
    StableQuery q{pf1.formula(), pf1.signature(), std::nullopt, {}};
    std::size_t oracle = 0;
    for (const Interpretation& s : {sP, sNotP})
        for (const Interpretation& e : {eA, eNotA})
            for (const Interpretation& s2 : {sP, sNotP}) {
                std::vector<Atom> atoms;
                for (const Atom& a : s.atoms()) atoms.push_back(timedAtom(0, a));
                for (const Atom& a : e.atoms()) atoms.push_back(timedAtom(0, a));
                for (const Atom& a : s2.atoms()) atoms.push_back(timedAtom(1, a));
                if (ref::isStableModel(Interpretation(pf1.signature(), atoms), q)) ++oracle;
            }
    require(ts.size() == oracle, "transition count disagrees with the brute-force scan");

    std::vector<Interpretation> p2 = paths(d, 2);
    SignaturePtr sig2 = timedSignature(*sig, 2);
    Interpretation cited(sig2,
                         {{"0:p", "f"}, {"0:a", "f"}, {"1:p", "f"}, {"1:a", "t"}, {"2:p", "t"}});
    require(std::find(p2.begin(), p2.end(), cited) != p2.end(), "missing the cited 2-step path");
}

// The switch example: four transitions from the mixed state, five under the
// C+ reading, and a byte-identical command-line transcript.
void criterion5() {
    GroundProgram plain = groundFile("switch.cp", {}, LanguageMode::BcPlus);
    SignaturePtr sig = plain.description.signature();
    Interpretation start(sig, {{"sw_status(s1)", "off"}, {"sw_status(s2)", "on"}});
    Interpretation swapped(sig, {{"sw_status(s1)", "on"}, {"sw_status(s2)", "off"}});
    auto event = [&](const char* f1, const char* f2) {
        return Interpretation(sig, {{"flip(s1)", f1}, {"flip(s2)", f2}});
    };

    std::vector<Transition> fromStart;
    for (const Transition& t : transitions(plain.description))
        if (t.from == start) fromStart.push_back(t);
    std::vector<Transition> expected = {{start, event("f", "f"), start},
                                        {start, event("t", "f"), swapped},
                                        {start, event("f", "t"), swapped},
                                        {start, event("t", "t"), swapped}};
    std::sort(expected.begin(), expected.end());
    require(fromStart == expected, "the four labeled transitions differ");

    GroundProgram cplus = groundFile("switch.cp", {}, LanguageMode::Cplus);
    std::vector<Transition> fromStartCplus;
    for (const Transition& t : transitions(cplus.description))
        if (t.from == start) fromStartCplus.push_back(t);
    require(fromStartCplus.size() == 5, "the C+ reading must add one transition");
    Transition extra{start, event("f", "f"), swapped};
    require(std::find(fromStartCplus.begin(), fromStartCplus.end(), extra) !=
                fromStartCplus.end(),
            "the extra C+ transition must be the quiet swap");
    for (const Transition& t : expected)
        require(std::find(fromStartCplus.begin(), fromStartCplus.end(), t) !=
                    fromStartCplus.end(),
                "C+ transitions must include the four plain ones");

    int exitCode = 0;
    std::string out = runCommand(
        cliPath + " -l bc+ " + domainsDir + "/switch.cp query=test 0 2>/dev/null", &exitCode);
    require(exitCode == 0, "CLI run failed");
    require(rstrip(out) == rstrip(slurp(goldenDir + "/switch_bcplus.txt")),
            "CLI output differs from the golden transcript");
}

// Transition endpoints are states, on a 200-description random corpus.
void criterion6() {
    testgen::Rng rng(20240601);
    for (int iter = 0; iter < 200; ++iter) {
        ActionDescription d = testgen::randomSimpleDescription(rng);
        std::vector<State> ss = states(d);
        for (const Transition& t : transitions(d)) {
            require(std::binary_search(ss.begin(), ss.end(), t.from),
                    "a transition starts outside the state set");
            require(std::binary_search(ss.begin(), ss.end(), t.to),
                    "a transition ends outside the state set");
        }
    }
}

// Paths of length 2 and 3 correspond exactly to composable transition
// chains, on the same corpus.
void criterion7() {
    testgen::Rng rng(20240602);
    for (int iter = 0; iter < 200; ++iter) {
        ActionDescription d = testgen::randomSimpleDescription(rng);
        std::vector<Transition> ts = transitions(d);
        for (int m : {2, 3})
            require(paths(d, m) == testgen::chainModels(d, ts, m),
                    "paths differ from composable chains at m=" + std::to_string(m));
    }
}

// Stable models of random formulas match the states of their embeddings.
void criterion8() {
    testgen::Rng rng(20240603);
    for (int iter = 0; iter < 200; ++iter) {
        testgen::RandomPf pf = testgen::randomPropositionalFormula(rng, 5, 4);
        std::vector<Interpretation> viaStable =
            stableModels({pf.formula, pf.sig, std::nullopt, {}});
        std::vector<Interpretation> viaStates;
        for (const State& s : states(pf2bcp(pf.formula, *pf.sig))) {
            std::vector<Atom> trueAtoms;
            for (const Atom& a : s.atoms())
                if (a.value == "t") trueAtoms.push_back(a);
            viaStates.push_back(Interpretation(pf.sig, std::move(trueAtoms)));
        }
        std::sort(viaStates.begin(), viaStates.end());
        require(viaStable == viaStates, "stable models differ from embedding states");
    }
}

// The bc and definite C+ embeddings describe the same transition systems as
// their reference translations.
void criterion9() {
    testgen::Rng rng(20240604);
    for (int iter = 0; iter < 100; ++iter) {
        BcDescription bc = testgen::randomBcDescription(rng);
        ActionDescription embedded = bc2bcp(bc);
        require(bcStates(bc) == states(embedded), "bc state sets differ");
        require(bcTransitions(bc) == transitions(embedded), "bc transition sets differ");
    }
    for (int iter = 0; iter < 100; ++iter) {
        CplusDescription cp = testgen::randomCplusDescription(rng);
        ActionDescription embedded = cp2bcp(cp);
        require(cplusStates(cp) == states(embedded), "C+ state sets differ");
        require(cplusTransitions(cp) == transitions(embedded), "C+ transition sets differ");
    }
}

// Desk-scale Blocks World: the grounded description is simple, the restack
// query has a least-horizon plan, and every returned step is a transition.
void criterion10() {
    GroundProgram prog = groundFile("blocks4.cp", {{"k", 2}, {"g", 1}}, LanguageMode::BcPlus);
    Classification c = classify(prog.description);
    require(c.simple, "the grounded description must be simple");

    SolveOptions opts;
    opts.limit = 0;
    opts.horizonCap = 4;
    opts.engine.budget = std::uint64_t(1) << 30;
    const QuerySpec* restack = nullptr;
    for (const QuerySpec& q : prog.queries)
        if (q.label == "restack") restack = &q;
    require(restack != nullptr, "missing the restack query");

    SolveResult r = solve(prog.description, *restack, opts);
    require(r.status == SolveStatus::SolutionsFound, "no plan found up to the cap");
    require(!r.solutions.empty(), "empty solution list");

    // Least horizon: no solution exists one step earlier.
    if (r.horizon > 0) {
        QuerySpec earlier = *restack;
        earlier.maxstep = r.horizon - 1;
        SolveResult shorter = solve(prog.description, earlier, opts);
        require(shorter.solutions.empty(), "a shorter plan exists; least horizon violated");
    }

    EngineOptions vo;
    vo.budget = std::uint64_t(1) << 30;
    std::vector<Transition> edges = transitions(prog.description, vo);
    for (const Solution& sol : r.solutions)
        for (int i = 0; i < sol.horizon; ++i) {
            Transition step{sol.fluents[i], sol.events[i], sol.fluents[i + 1]};
            require(std::binary_search(edges.begin(), edges.end(), step),
                    "a solution step is not a transition");
        }
}

// Engine laws over a 1000-pair random corpus: reduct idempotence, the
// satisfaction-reduct correspondence, and minimality of stable models for
// implication-free formulas.
void criterion11() {
    testgen::Rng rng(20240605);
    SignaturePtr sig = makeSignature({{"a", ConstantKind::RegularFluent, booleanDomain()},
                                      {"b", ConstantKind::RegularFluent, booleanDomain()},
                                      {"c", ConstantKind::RegularFluent, booleanDomain()},
                                      {"d", ConstantKind::RegularFluent, booleanDomain()}});
    std::vector<Atom> atoms = sig->atoms();
    for (int iter = 0; iter < 1000; ++iter) {
        Formula f = testgen::randomFormula(rng, atoms, 4, true);
        Interpretation x = testgen::randomInterpretation(rng, sig, atoms);
        Formula r = reduct(f, x);
        require(structurallyEqual(reduct(r, x), r), "reduct is not idempotent");
        require(satisfies(x, r) == satisfies(x, f), "satisfaction-reduct correspondence broken");
    }
    for (int iter = 0; iter < 1000; ++iter) {
        Formula f = testgen::randomFormula(rng, atoms, 4, false);
        std::set<Atom> occSet = atomsOf(f);
        std::vector<Atom> occ(occSet.begin(), occSet.end());
        require(stableModels({f, sig, std::nullopt, {}}) ==
                    testgen::minimalClassicalModels(f, sig, occ),
                "stable models differ from minimal classical models");
    }
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--cli") cliPath = argv[++i];
        if (arg == "--domains") domainsDir = argv[++i];
        if (arg == "--golden") goldenDir = argv[++i];
    }
    if (cliPath.empty() || domainsDir.empty() || goldenDir.empty()) {
        std::cerr << "usage: acceptance --cli PATH --domains DIR --golden DIR\n";
        return 2;
    }

    struct Criterion {
        int id;
        const char* title;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "stable models of the opening example", criterion1},
        {2, "double-negation regression", criterion2},
        {3, "cardinality expansion", criterion3},
        {4, "two-vertex transition system", criterion4},
        {5, "two switches across modes and the CLI transcript", criterion5},
        {6, "transition endpoints are states (200 random descriptions)", criterion6},
        {7, "paths are composable chains (200 random descriptions, m=2,3)", criterion7},
        {8, "formula embedding preserves stable models (200 random formulas)", criterion8},
        {9, "bc and C+ embeddings match their reference translations (100+100)", criterion9},
        {10, "desk-scale Blocks World plan", criterion10},
        {11, "engine laws (1000 random pairs)", criterion11},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        try {
            c.run();
            std::cout << "PASS: criterion " << c.id << " - " << c.title << "\n";
        } catch (const Failure& f) {
            ++failures;
            std::cout << "FAIL: criterion " << c.id << " - " << c.title << ": " << f.detail
                      << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL: criterion " << c.id << " - " << c.title << ": " << e.what()
                      << "\n";
        }
        std::cout.flush();
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
