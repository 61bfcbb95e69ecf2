#include <doctest.h>

#include <fstream>
#include <sstream>

#include "bcplus/driver.hpp"
#include "bcplus/ground.hpp"
#include "bcplus/parser.hpp"

using namespace bcplus;

namespace {

std::string sourcePath(const std::string& rel) {
    return std::string(BCPLUS_SOURCE_DIR) + "/" + rel;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string rstrip(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    return s;
}

int runCli(const std::vector<std::string>& args, std::string* out = nullptr,
           std::string* err = nullptr) {
    std::ostringstream o, e;
    int code = run(args, o, e);
    if (out) *out = o.str();
    if (err) *err = e.str();
    return code;
}

}  // namespace

TEST_CASE("command-line parsing") {
    auto parsed = parseCli({"-l", "c+", "switch.cp", "k=3", "g=2", "query=test", "0",
                            "--horizon-cap", "7", "--dump-theory"});
    REQUIRE(std::holds_alternative<CliConfig>(parsed));
    const CliConfig& cfg = std::get<CliConfig>(parsed);
    CHECK(cfg.mode == LanguageMode::Cplus);
    CHECK(cfg.inputPath == "switch.cp");
    CHECK(cfg.bindings == std::map<std::string, long>{{"k", 3}, {"g", 2}});
    CHECK(cfg.queryLabel == "test");
    CHECK(cfg.solutionCount == 0);
    CHECK(cfg.horizonCap == 7);
    CHECK(cfg.dumpTheory);

    CHECK(std::holds_alternative<std::string>(parseCli({})));
    CHECK(std::holds_alternative<std::string>(parseCli({"-l", "prolog", "f.cp"})));
    CHECK(std::holds_alternative<std::string>(parseCli({"f.cp", "--frobnicate"})));
    CHECK(std::holds_alternative<std::string>(parseCli({"f.cp", "k=three"})));
}

TEST_CASE("solution formatting") {
    SignaturePtr sig = makeSignature({
        {"sw_status(s1)", ConstantKind::RegularFluent, {"off", "on"}},
        {"sw_status(s2)", ConstantKind::RegularFluent, {"off", "on"}},
        {"flip(s1)", ConstantKind::Action, booleanDomain()},
        {"flip(s2)", ConstantKind::Action, booleanDomain()},
    });

    SUBCASE("one flip prints its ACTIONS line between the step lines") {
        Solution sol;
        sol.horizon = 1;
        sol.fluents = {Interpretation(sig, {{"sw_status(s1)", "off"}, {"sw_status(s2)", "on"}}),
                       Interpretation(sig, {{"sw_status(s1)", "on"}, {"sw_status(s2)", "off"}})};
        sol.events = {Interpretation(sig, {{"flip(s1)", "f"}, {"flip(s2)", "t"}})};
        CHECK(formatSolution(sol, 3, *sig) ==
              "Solution: 3\n"
              "\t0:  sw_status(s1)=off sw_status(s2)=on\n\n"
              "\tACTIONS:  flip(s2)\n\n"
              "\t1:  sw_status(s1)=on sw_status(s2)=off\n\n");
    }

    SUBCASE("all-false events print no ACTIONS line") {
        Solution sol;
        sol.horizon = 1;
        sol.fluents = {Interpretation(sig, {{"sw_status(s1)", "off"}, {"sw_status(s2)", "on"}}),
                       Interpretation(sig, {{"sw_status(s1)", "off"}, {"sw_status(s2)", "on"}})};
        sol.events = {Interpretation(sig, {{"flip(s1)", "f"}, {"flip(s2)", "f"}})};
        std::string text = formatSolution(sol, 1, *sig);
        CHECK(text.find("ACTIONS") == std::string::npos);
    }

    SUBCASE("a zero-step solution prints only its initial line") {
        Solution sol;
        sol.horizon = 0;
        sol.fluents = {Interpretation(sig, {{"sw_status(s1)", "on"}, {"sw_status(s2)", "off"}})};
        CHECK(formatSolution(sol, 1, *sig) ==
              "Solution: 1\n\t0:  sw_status(s1)=on sw_status(s2)=off\n\n");
    }
}

TEST_CASE("the switch run reproduces the golden output byte for byte") {
    std::string out, err;
    int code = runCli({"-l", "bc+", sourcePath("domains/switch.cp"), "query=test", "0"}, &out,
                      &err);
    CHECK(code == 0);
    CHECK(err.empty());
    CHECK(rstrip(out) == rstrip(slurp(sourcePath("tests/golden/switch_bcplus.txt"))));
}

TEST_CASE("the same run under c+ mode prints one more solution") {
    std::string out, err;
    int code = runCli({"-l", "c+", sourcePath("domains/switch.cp"), "query=test", "0"}, &out,
                      &err);
    CHECK(code == 0);
    std::size_t count = 0;
    for (std::size_t pos = out.find("Solution: "); pos != std::string::npos;
         pos = out.find("Solution: ", pos + 1))
        ++count;
    CHECK(count == 5);
}

TEST_CASE("exit codes") {
    std::string out, err;

    SUBCASE("solutions found") {
        CHECK(runCli({sourcePath("domains/switch.cp"), "query=test"}, &out, &err) == 0);
    }

    SUBCASE("no solutions") {
        // flipping cannot keep switch 1 off while 2 starts on
        std::string text =
            ":- sorts s.\n:- objects a, b :: s.\n"
            ":- constants f :: inertialFluent(s).\n"
            ":- query\nlabel :: q;\nmaxstep :: 0;\n0: f=a & f=b.\n";
        std::string path = "/tmp/bcplus_test_nosol.cp";
        std::ofstream(path) << text;
        CHECK(runCli({path, "query=q"}, &out, &err) == 1);
        CHECK(err.find("no solution") != std::string::npos);
    }

    SUBCASE("unknown query") {
        CHECK(runCli({sourcePath("domains/switch.cp"), "query=missing"}, &out, &err) == 2);
        CHECK(err.find("unknown query 'missing'") != std::string::npos);
    }

    SUBCASE("parse errors carry positions") {
        std::string path = "/tmp/bcplus_test_badsyntax.cp";
        std::ofstream(path) << ":- sorts\n  foo\n";
        CHECK(runCli({path, "query=q"}, &out, &err) == 2);
        CHECK(err.find(path + ":") != std::string::npos);
    }

    SUBCASE("missing file") {
        CHECK(runCli({"/tmp/bcplus_no_such_file.cp", "query=q"}, &out, &err) == 2);
    }

    SUBCASE("no query and no dump") {
        CHECK(runCli({sourcePath("domains/switch.cp")}, &out, &err) == 2);
        CHECK(err.find("no query selected") != std::string::npos);
    }
}

TEST_CASE("dump flags") {
    std::string out, err;

    SUBCASE("the transition graph dump lists states and edges") {
        CHECK(runCli({sourcePath("domains/switch.cp"), "--dump-graph"}, &out, &err) == 0);
        CHECK(out.find("% state {sw_status(s1)=off sw_status(s2)=on}") != std::string::npos);
        CHECK(out.find("--[") != std::string::npos);
    }

    SUBCASE("dot output") {
        CHECK(runCli({sourcePath("domains/switch.cp"), "--dump-graph-dot"}, &out, &err) == 0);
        CHECK(out.find("digraph transitions {") != std::string::npos);
    }

    SUBCASE("the theory dump precedes the solutions") {
        CHECK(runCli({sourcePath("domains/switch.cp"), "query=test", "--dump-theory"}, &out,
                     &err) == 0);
        CHECK(out.find("% timed theory, horizon 1") != std::string::npos);
        CHECK(out.find("Solution: 1") != std::string::npos);
        CHECK(out.find("% timed theory") < out.find("Solution: 1"));
    }
}
