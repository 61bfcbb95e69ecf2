#ifndef BCPLUS_PARSER_HPP
#define BCPLUS_PARSER_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "bcplus/ast.hpp"

namespace bcplus {

struct ParseResult {
    std::optional<ast::ProgramAst> program;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return program.has_value() && diagnostics.empty(); }
};

/// Parses a program in the CCalc-style surface syntax. The mode selects the
/// accepted law surface: `ifcons` clauses exist only in bc mode, while
/// `caused` and the constraint-style abbreviations are rejected there.
ParseResult parse(std::string_view text, LanguageMode mode = LanguageMode::BcPlus);

}  // namespace bcplus

#endif
