#ifndef BCPLUS_GROUND_HPP
#define BCPLUS_GROUND_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcplus/action.hpp"
#include "bcplus/ast.hpp"
#include "bcplus/frontends.hpp"
#include "bcplus/query.hpp"

namespace bcplus {

struct GroundProgram {
    LanguageMode mode = LanguageMode::BcPlus;
    /// The description the solver runs on. Under bc and c+ modes this is the
    /// result of embedding the source description.
    ActionDescription description;
    std::optional<BcDescription> bcSource;
    std::optional<CplusDescription> cplusSource;
    std::vector<QuerySpec> queries;
};

struct GroundResult {
    std::optional<GroundProgram> program;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return program.has_value() && diagnostics.empty(); }
};

/// Instantiates a parsed program: resolves sorts and objects, expands
/// constant schemas into ground constants, enumerates law schema variables
/// over their sorts (in sorted object order), evaluates side conditions and
/// value arithmetic, expands conditional cardinality sets, and lowers the
/// mode's abbreviations. `bindings` supplies the symbolic numerals (k=3).
GroundResult ground(const ast::ProgramAst& prog, const std::map<std::string, long>& bindings,
                    LanguageMode mode);

}  // namespace bcplus

#endif
