#ifndef BCPLUS_LEXER_HPP
#define BCPLUS_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "bcplus/ast.hpp"

namespace bcplus {

struct Token {
    enum class Type { Ident, Int, Punct, End };
    Type type = Type::End;
    std::string text;
    long value = 0;  // Int only
    SourcePos pos;
};

class LexError : public std::runtime_error {
public:
    LexError(SourcePos pos, const std::string& msg) : std::runtime_error(msg), pos(pos) {}
    SourcePos pos;
};

/// Tokenizes a program. `%` starts a line comment. Throws LexError on an
/// unexpected character.
std::vector<Token> tokenize(std::string_view text);

}  // namespace bcplus

#endif
