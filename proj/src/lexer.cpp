#include "bcplus/lexer.hpp"

#include <cctype>

namespace bcplus {

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;

    auto peek = [&](std::size_t k = 0) -> char {
        return i + k < text.size() ? text[i + k] : '\0';
    };
    auto advance = [&]() {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    auto punct = [&](SourcePos pos, std::string s) {
        out.push_back({Token::Type::Punct, std::move(s), 0, pos});
    };

    while (i < text.size()) {
        char c = peek();
        SourcePos pos{line, col};
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            continue;
        }
        if (c == '%') {
            while (i < text.size() && peek() != '\n') advance();
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                word += peek();
                advance();
            }
            out.push_back({Token::Type::Ident, std::move(word), 0, pos});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
                digits += peek();
                advance();
            }
            out.push_back({Token::Type::Int, digits, std::stol(digits), pos});
            continue;
        }
        switch (c) {
            case ':':
                advance();
                if (peek() == '-') {
                    advance();
                    punct(pos, ":-");
                } else if (peek() == ':') {
                    advance();
                    punct(pos, "::");
                } else {
                    punct(pos, ":");
                }
                continue;
            case '.':
                advance();
                if (peek() == '.') {
                    advance();
                    punct(pos, "..");
                } else {
                    punct(pos, ".");
                }
                continue;
            case '<':
                if (peek(1) == '-' && peek(2) == '>') {
                    advance();
                    advance();
                    advance();
                    punct(pos, "<->");
                    continue;
                }
                throw LexError(pos, "unexpected character '<'");
            case '\\':
                if (peek(1) == '=') {
                    advance();
                    advance();
                    punct(pos, "\\=");
                    continue;
                }
                throw LexError(pos, "unexpected character '\\'");
            case '>':
                if (peek(1) == '>') {
                    advance();
                    advance();
                    punct(pos, ">>");
                    continue;
                }
                throw LexError(pos, "unexpected character '>'");
            case '(': case ')': case '{': case '}': case ',': case ';':
            case '=': case '&': case '|': case '~': case '-': case '+': case '*':
                advance();
                punct(pos, std::string(1, c));
                continue;
            default:
                throw LexError(pos, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::Type::End, "", 0, {line, col}});
    return out;
}

}  // namespace bcplus
