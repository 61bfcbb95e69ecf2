#ifndef BCPLUS_DRIVER_HPP
#define BCPLUS_DRIVER_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bcplus/ast.hpp"
#include "bcplus/query.hpp"

namespace bcplus {

struct CliConfig {
    std::string inputPath;
    LanguageMode mode = LanguageMode::BcPlus;
    std::map<std::string, long> bindings;
    std::string queryLabel;
    std::optional<std::size_t> solutionCount;  // trailing N; 0 = all; default 1
    int horizonCap = 20;
    std::uint64_t budget = EngineOptions{}.budget;
    bool dumpTheory = false;
    bool dumpGraph = false;
    bool dumpGraphDot = false;
};

/// Parses `[-l bc+|bc|c+] <file> [name=int ...] [query=<label>] [N]
/// [--horizon-cap K] [--budget N] [--dump-theory] [--dump-graph]
/// [--dump-graph-dot]`. Returns an error message on bad usage.
std::variant<CliConfig, std::string> parseCli(const std::vector<std::string>& args);

/// Renders one solution block: the header, one tab-indented `i:` line per
/// step and an ACTIONS line between steps when some action atom prints.
/// True Booleans print bare, false Booleans are omitted, everything else
/// prints as name=value.
std::string formatSolution(const Solution& sol, std::size_t index, const Signature& base);

/// The command-line entry point: parse, ground, route through the selected
/// language mode, solve, print. Exit code 0 with solutions, 1 without, 2 on
/// diagnostics.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcplus

#endif
