#include "bcplus/driver.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include "bcplus/ground.hpp"
#include "bcplus/parser.hpp"
#include "bcplus/transition.hpp"
#include "bcplus/translate.hpp"

namespace bcplus {

namespace {

bool allDigits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<long> parseLong(const std::string& s) {
    if (!allDigits(s)) return std::nullopt;
    return std::stol(s);
}

}  // namespace

std::variant<CliConfig, std::string> parseCli(const std::vector<std::string>& args) {
    CliConfig cfg;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        auto nextValue = [&](const char* what) -> std::optional<std::string> {
            if (i + 1 >= args.size()) return std::nullopt;
            (void)what;
            return args[++i];
        };
        if (arg == "-l") {
            auto v = nextValue("a language mode");
            if (!v) return std::string("-l expects a language mode");
            if (*v == "bc+")
                cfg.mode = LanguageMode::BcPlus;
            else if (*v == "bc")
                cfg.mode = LanguageMode::Bc;
            else if (*v == "c+")
                cfg.mode = LanguageMode::Cplus;
            else
                return "unknown language mode '" + *v + "'";
            continue;
        }
        if (arg == "--horizon-cap") {
            auto v = nextValue("an integer");
            auto n = v ? parseLong(*v) : std::nullopt;
            if (!n) return std::string("--horizon-cap expects a nonnegative integer");
            cfg.horizonCap = static_cast<int>(*n);
            continue;
        }
        if (arg == "--budget") {
            auto v = nextValue("an integer");
            auto n = v ? parseLong(*v) : std::nullopt;
            if (!n) return std::string("--budget expects a nonnegative integer");
            cfg.budget = static_cast<std::uint64_t>(*n);
            continue;
        }
        if (arg == "--dump-theory") {
            cfg.dumpTheory = true;
            continue;
        }
        if (arg == "--dump-graph") {
            cfg.dumpGraph = true;
            continue;
        }
        if (arg == "--dump-graph-dot") {
            cfg.dumpGraphDot = true;
            continue;
        }
        if (arg.rfind("--", 0) == 0) return "unknown option '" + arg + "'";
        std::size_t eq = arg.find('=');
        if (eq != std::string::npos && eq > 0) {
            std::string name = arg.substr(0, eq);
            std::string value = arg.substr(eq + 1);
            if (name == "query") {
                cfg.queryLabel = value;
            } else {
                auto n = parseLong(value);
                if (!n) return "constant definition '" + arg + "' expects an integer";
                cfg.bindings[name] = *n;
            }
            continue;
        }
        if (allDigits(arg)) {
            cfg.solutionCount = static_cast<std::size_t>(*parseLong(arg));
            continue;
        }
        if (!cfg.inputPath.empty()) return "unexpected argument '" + arg + "'";
        cfg.inputPath = arg;
    }
    if (cfg.inputPath.empty()) return std::string("no input file given");
    return cfg;
}

std::string formatSolution(const Solution& sol, std::size_t index, const Signature& base) {
    auto renderLine = [&](const Interpretation& atoms) {
        std::string out;
        for (const Atom& a : atoms.atoms()) {
            const ConstantDecl* c = base.find(a.constant);
            std::string text;
            if (c && c->isBoolean()) {
                if (a.value != "t") continue;
                text = a.constant;
            } else {
                text = toText(a);
            }
            if (!out.empty()) out += " ";
            out += text;
        }
        return out;
    };

    std::ostringstream os;
    os << "Solution: " << index << "\n";
    for (int i = 0; i <= sol.horizon; ++i) {
        os << "\t" << i << ":  " << renderLine(sol.fluents[i]) << "\n\n";
        if (i < sol.horizon) {
            std::string actions = renderLine(sol.events[i]);
            if (!actions.empty()) os << "\tACTIONS:  " << actions << "\n\n";
        }
    }
    return os.str();
}

namespace {

int failWithDiagnostics(const std::string& path, const std::vector<Diagnostic>& diags,
                        std::ostream& err) {
    for (const Diagnostic& d : diags) err << path << ":" << toText(d) << "\n";
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto parsed = parseCli(args);
    if (const std::string* msg = std::get_if<std::string>(&parsed)) {
        err << "error: " << *msg << "\n";
        err << "usage: bcplus [-l bc+|bc|c+] <file> [name=int ...] query=<label> [N]\n"
            << "              [--horizon-cap K] [--budget N] [--dump-theory] [--dump-graph]\n"
            << "              [--dump-graph-dot]\n";
        return 2;
    }
    const CliConfig& cfg = std::get<CliConfig>(parsed);

    std::ifstream in(cfg.inputPath);
    if (!in) {
        err << "error: cannot read '" << cfg.inputPath << "'\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    ParseResult parseResult = parse(buffer.str(), cfg.mode);
    if (!parseResult.ok()) return failWithDiagnostics(cfg.inputPath, parseResult.diagnostics, err);

    GroundResult groundResult = ground(*parseResult.program, cfg.bindings, cfg.mode);
    if (!groundResult.ok()) return failWithDiagnostics(cfg.inputPath, groundResult.diagnostics, err);
    const GroundProgram& prog = *groundResult.program;

    EngineOptions engine;
    engine.budget = cfg.budget;

    try {
        if (cfg.dumpGraph || cfg.dumpGraphDot) {
            TransitionGraph graph = transitionGraph(prog.description, engine);
            if (cfg.dumpGraph) writeEdgeList(graph, *prog.description.signature(), out);
            if (cfg.dumpGraphDot) writeDot(graph, *prog.description.signature(), out);
        }

        if (cfg.queryLabel.empty()) {
            if (cfg.dumpGraph || cfg.dumpGraphDot || cfg.dumpTheory) {
                if (cfg.dumpTheory) dumpTheory(translate(prog.description, 1), out);
                return 0;
            }
            err << "error: no query selected (use query=<label>)\n";
            return 2;
        }

        const QuerySpec* query = nullptr;
        for (const QuerySpec& q : prog.queries)
            if (q.label == cfg.queryLabel) query = &q;
        if (!query) {
            err << "error: unknown query '" << cfg.queryLabel << "'\n";
            return 2;
        }

        SolveOptions opts;
        opts.horizonCap = cfg.horizonCap;
        opts.limit = cfg.solutionCount.value_or(1);
        opts.engine = engine;
        SolveResult result = solve(prog.description, *query, opts);

        if (cfg.dumpTheory) dumpTheory(translate(prog.description, std::max(result.horizon, 0)), out);

        for (std::size_t i = 0; i < result.solutions.size(); ++i)
            out << formatSolution(result.solutions[i], i + 1, *prog.description.signature());

        switch (result.status) {
            case SolveStatus::SolutionsFound: return 0;
            case SolveStatus::NoSolutionAtHorizon:
                err << "no solution at maxstep " << result.horizon << "\n";
                return 1;
            case SolveStatus::HorizonCapExhausted:
                err << "no solution up to the horizon cap " << result.horizon << "\n";
                return 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace bcplus
