#include "bcplus/parser.hpp"

#include <map>

#include "bcplus/lexer.hpp"

namespace bcplus {

std::string toText(const Diagnostic& d) {
    return std::to_string(d.pos.line) + ":" + std::to_string(d.pos.col) + ": " + d.message;
}

namespace ast {

std::string toText(const Term& t) {
    if (t.isInt) return std::to_string(t.value);
    std::string out = t.name;
    if (!t.args.empty()) {
        out += "(";
        for (std::size_t i = 0; i < t.args.size(); ++i) {
            if (i) out += ",";
            out += toText(t.args[i]);
        }
        out += ")";
    }
    return out;
}

}  // namespace ast

namespace {

using namespace ast;

struct ParseError {
    SourcePos pos;
    std::string message;
};

// Clause keywords are reserved inside laws; using one as a term is an error.
bool isReservedWord(const std::string& s) {
    return s == "if" || s == "after" || s == "ifcons" || s == "causes" || s == "of";
}

class Parser {
public:
    Parser(std::vector<Token> tokens, LanguageMode mode) : toks_(std::move(tokens)), mode_(mode) {}

    ProgramAst parseProgram() {
        ProgramAst prog;
        while (!at(Token::Type::End)) {
            if (acceptPunct(":-"))
                parseSection(prog);
            else
                prog.laws.push_back(parseLaw());
        }
        return prog;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    const Token& ahead(std::size_t k) const {
        return toks_[std::min(pos_ + k, toks_.size() - 1)];
    }
    bool at(Token::Type t) const { return cur().type == t; }
    bool atPunct(const std::string& s) const {
        return cur().type == Token::Type::Punct && cur().text == s;
    }
    bool atIdent(const std::string& s) const {
        return cur().type == Token::Type::Ident && cur().text == s;
    }
    Token next() { return toks_[pos_++]; }
    bool acceptPunct(const std::string& s) {
        if (atPunct(s)) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool acceptIdent(const std::string& s) {
        if (atIdent(s)) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expectPunct(const std::string& s) {
        if (!acceptPunct(s)) fail("expected '" + s + "'");
    }
    std::string expectIdent(const char* what) {
        if (!at(Token::Type::Ident)) fail(std::string("expected ") + what);
        return next().text;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        std::string got = cur().type == Token::Type::End ? "end of input" : "'" + cur().text + "'";
        throw ParseError{cur().pos, msg + ", got " + got};
    }

    // ---- sections ----

    void parseSection(ProgramAst& prog) {
        SourcePos pos = cur().pos;
        std::string section = expectIdent("a section name after ':-'");
        if (section == "sorts")
            parseItems([&] { parseSortItem(prog); });
        else if (section == "objects")
            parseItems([&] { parseObjectItem(prog); });
        else if (section == "constants")
            parseItems([&] { parseConstantItem(prog); });
        else if (section == "variables")
            parseItems([&] { parseVariableItem(prog); });
        else if (section == "query")
            parseQuery(prog);
        else
            throw ParseError{pos, "unknown section ':- " + section + "'"};
    }

    template <class Fn>
    void parseItems(Fn item) {
        while (true) {
            item();
            if (acceptPunct(";")) continue;
            expectPunct(".");
            break;
        }
    }

    void parseSortItem(ProgramAst& prog) {
        std::string name = expectIdent("a sort name");
        prog.sorts.push_back(name);
        while (atPunct(">>")) {
            SourcePos pos = cur().pos;
            next();
            std::string sub = expectIdent("a sort name after '>>'");
            prog.sorts.push_back(sub);
            prog.subsorts.push_back({name, sub, pos});
            name = sub;
        }
    }

    void parseObjectItem(ProgramAst& prog) {
        ObjectDecl decl;
        decl.pos = cur().pos;
        while (true) {
            decl.specs.push_back(parseObjectSpec());
            if (!acceptPunct(",")) break;
        }
        expectPunct("::");
        decl.sortName = expectIdent("a sort name");
        prog.objects.push_back(std::move(decl));
    }

    ObjectSpec parseObjectSpec() {
        ObjectSpec spec;
        spec.pos = cur().pos;
        if (at(Token::Type::Int)) {
            long lo = next().value;
            if (acceptPunct("..")) {
                if (!at(Token::Type::Int)) fail("expected an integer after '..'");
                spec.range = {lo, next().value};
            } else {
                spec.intValue = lo;
            }
            return spec;
        }
        spec.name = expectIdent("an object name");
        if (acceptPunct("(")) {
            if (!at(Token::Type::Int)) fail("expected an integer argument");
            long lo = next().value;
            if (acceptPunct("..")) {
                if (!at(Token::Type::Int)) fail("expected an integer after '..'");
                spec.range = {lo, next().value};
            } else {
                spec.intValue = lo;
            }
            expectPunct(")");
        }
        return spec;
    }

    void parseConstantItem(ProgramAst& prog) {
        ConstantDeclAst decl;
        decl.pos = cur().pos;
        while (true) {
            decl.schemas.push_back(parseTerm());
            if (!acceptPunct(",")) break;
        }
        expectPunct("::");
        SourcePos kindPos = cur().pos;
        std::string kind = expectIdent("a constant kind");
        static const std::map<std::string, KindKeyword> kinds = {
            {"simpleFluent", KindKeyword::SimpleFluent},
            {"inertialFluent", KindKeyword::InertialFluent},
            {"sdFluent", KindKeyword::SdFluent},
            {"action", KindKeyword::Action},
            {"exogenousAction", KindKeyword::ExogenousAction},
            {"attribute", KindKeyword::Attribute},
        };
        auto it = kinds.find(kind);
        if (it == kinds.end()) throw ParseError{kindPos, "unknown constant kind '" + kind + "'"};
        decl.kind = it->second;
        if (acceptPunct("(")) {
            decl.domainSort = expectIdent("a domain sort");
            decl.starred = acceptPunct("*");
            expectPunct(")");
        }
        if (decl.kind == KindKeyword::Attribute) {
            if (!decl.domainSort || !decl.starred)
                throw ParseError{kindPos, "attribute requires a starred domain sort"};
            if (!acceptIdent("of")) fail("expected 'of' after the attribute domain");
            decl.parent = parseTerm();
        }
        prog.constants.push_back(std::move(decl));
    }

    void parseVariableItem(ProgramAst& prog) {
        VariableDeclAst decl;
        decl.pos = cur().pos;
        decl.names.push_back(expectIdent("a variable name"));
        while (acceptPunct(",")) decl.names.push_back(expectIdent("a variable name"));
        expectPunct("::");
        decl.sortName = expectIdent("a sort name");
        prog.variables.push_back(std::move(decl));
    }

    void parseQuery(ProgramAst& prog) {
        QueryAst query;
        query.pos = cur().pos;
        bool sawLabel = false;
        parseItems([&] {
            if (atIdent("label") && ahead(1).type == Token::Type::Punct && ahead(1).text == "::") {
                next();
                next();
                if (at(Token::Type::Ident) || at(Token::Type::Int))
                    query.label = next().text;
                else
                    fail("expected a query label");
                sawLabel = true;
                return;
            }
            if (atIdent("maxstep") && ahead(1).type == Token::Type::Punct &&
                ahead(1).text == "::") {
                next();
                next();
                if (!at(Token::Type::Int)) fail("expected an integer maxstep bound");
                query.maxstep = next().value;
                return;
            }
            QueryLine line;
            line.pos = cur().pos;
            if (at(Token::Type::Int)) {
                line.step = next().value;
            } else if (acceptIdent("maxstep")) {
                line.atMaxstep = true;
            } else {
                fail("expected a step reference");
            }
            expectPunct(":");
            line.formula = parseFormula();
            query.lines.push_back(std::move(line));
        });
        if (!sawLabel) throw ParseError{query.pos, "query block lacks a label"};
        prog.queries.push_back(std::move(query));
    }

    // ---- laws ----

    LawAst parseLaw() {
        LawAst law;
        law.pos = cur().pos;
        if (at(Token::Type::Ident)) {
            const std::string& kw = cur().text;
            if (kw == "caused") return parseCaused();
            if (kw == "default") return parseDefault();
            if (kw == "exogenous" || kw == "inertial") return parseConstantLaw();
            if (kw == "constraint" || kw == "always") return parseConstraintLike();
            if (kw == "nonexecutable") return parseNonexecutable();
        }
        return parseAtomLedLaw();
    }

    void requireNotBc(const char* what) {
        if (mode_ == LanguageMode::Bc)
            throw ParseError{cur().pos, std::string("'") + what + "' is not available in bc mode"};
    }

    LawAst parseCaused() {
        requireNotBc("caused");
        LawAst law;
        law.pos = cur().pos;
        law.kind = LawKeyword::Caused;
        next();
        law.head = parseFormula();
        if (acceptIdent("if")) law.ifPart = parseFormula();
        if (acceptIdent("after")) law.afterPart = parseFormula();
        expectPunct(".");
        return law;
    }

    LawAst parseDefault() {
        LawAst law;
        law.pos = cur().pos;
        law.kind = LawKeyword::Default;
        next();
        law.headAtom = parseAtom();
        if (mode_ == LanguageMode::Bc) {
            if (acceptIdent("after")) law.afterPart = parseFormula();
        } else {
            if (acceptIdent("if")) law.ifPart = parseFormula();
            if (acceptIdent("after")) law.afterPart = parseFormula();
        }
        expectPunct(".");
        return law;
    }

    LawAst parseConstantLaw() {
        LawAst law;
        law.pos = cur().pos;
        law.kind = cur().text == "exogenous" ? LawKeyword::Exogenous : LawKeyword::Inertial;
        next();
        law.constant = parseTerm();
        expectPunct(".");
        return law;
    }

    LawAst parseConstraintLike() {
        requireNotBc(cur().text.c_str());
        LawAst law;
        law.pos = cur().pos;
        law.kind = cur().text == "constraint" ? LawKeyword::Constraint : LawKeyword::Always;
        next();
        law.head = parseFormula();
        expectPunct(".");
        return law;
    }

    LawAst parseNonexecutable() {
        requireNotBc("nonexecutable");
        LawAst law;
        law.pos = cur().pos;
        law.kind = LawKeyword::Nonexecutable;
        next();
        law.head = parseFormula();
        if (acceptIdent("if")) law.ifPart = parseFormula();
        expectPunct(".");
        return law;
    }

    LawAst parseAtomLedLaw() {
        LawAst law;
        law.pos = cur().pos;
        AtomAst head = parseAtom();
        if (atIdent("causes")) {
            next();
            law.kind = LawKeyword::Causes;
            law.headAtom = head;
            law.head = parseFormula();
            if (acceptIdent("if")) law.ifPart = parseFormula();
            expectPunct(".");
            return law;
        }
        if (mode_ != LanguageMode::Bc)
            fail("expected 'causes' after the leading atom");
        law.kind = LawKeyword::BcRule;
        law.headAtom = head;
        if (acceptIdent("if")) law.ifPart = parseFormula();
        if (acceptIdent("after")) law.afterPart = parseFormula();
        if (acceptIdent("ifcons")) law.ifconsPart = parseFormula();
        expectPunct(".");
        return law;
    }

    // ---- formulas ----

    FormulaPtr mkFormula(FormulaAst f) { return std::make_shared<FormulaAst>(std::move(f)); }

    FormulaPtr parseFormula() { return parseIff(); }

    FormulaPtr parseIff() {
        FormulaPtr lhs = parseOr();
        while (atPunct("<->")) {
            SourcePos pos = cur().pos;
            next();
            FormulaAst f;
            f.kind = FormulaAst::Kind::Binary;
            f.op = FormulaOp::Iff;
            f.lhs = lhs;
            f.rhs = parseOr();
            f.pos = pos;
            lhs = mkFormula(std::move(f));
        }
        return lhs;
    }

    FormulaPtr parseOr() {
        FormulaPtr lhs = parseAnd();
        while (atPunct("|")) {
            SourcePos pos = cur().pos;
            next();
            FormulaAst f;
            f.kind = FormulaAst::Kind::Binary;
            f.op = FormulaOp::Or;
            f.lhs = lhs;
            f.rhs = parseAnd();
            f.pos = pos;
            lhs = mkFormula(std::move(f));
        }
        return lhs;
    }

    FormulaPtr parseAnd() {
        FormulaPtr lhs = parseUnary();
        while (atPunct("&")) {
            SourcePos pos = cur().pos;
            next();
            FormulaAst f;
            f.kind = FormulaAst::Kind::Binary;
            f.op = FormulaOp::And;
            f.lhs = lhs;
            f.rhs = parseUnary();
            f.pos = pos;
            lhs = mkFormula(std::move(f));
        }
        return lhs;
    }

    FormulaPtr parseUnary() {
        if (atPunct("-")) {
            SourcePos pos = cur().pos;
            next();
            FormulaAst f;
            f.kind = FormulaAst::Kind::Unary;
            f.op = FormulaOp::Neg;
            f.lhs = parseUnary();
            f.pos = pos;
            return mkFormula(std::move(f));
        }
        return parsePrimary();
    }

    FormulaPtr parsePrimary() {
        SourcePos pos = cur().pos;
        if (acceptPunct("(")) {
            FormulaPtr f = parseFormula();
            expectPunct(")");
            return f;
        }
        if (atPunct("{")) return parseCardinality();
        FormulaAst f;
        f.kind = FormulaAst::Kind::Atom;
        f.pos = pos;
        if (atPunct("~")) {
            f.atom = parseAtom();
            return mkFormula(std::move(f));
        }
        Term t = parseTerm();
        if (atPunct("\\=")) {
            next();
            FormulaAst d;
            d.kind = FormulaAst::Kind::Diseq;
            d.diseq = {t, parseTerm()};
            d.pos = pos;
            return mkFormula(std::move(d));
        }
        f.atom.head = std::move(t);
        if (acceptPunct("=")) f.atom.value = parseArith();
        return mkFormula(std::move(f));
    }

    FormulaPtr parseCardinality() {
        SourcePos pos = cur().pos;
        expectPunct("{");
        FormulaAst f;
        f.kind = FormulaAst::Kind::Card;
        f.pos = pos;
        f.card.var = expectIdent("a set variable");
        expectPunct("|");
        f.card.condition = parseAtom();
        expectPunct("}");
        if (at(Token::Type::Int) || at(Token::Type::Ident))
            f.card.bound = parseTerm();
        else
            fail("expected a cardinality bound");
        return mkFormula(std::move(f));
    }

    AtomAst parseAtom() {
        AtomAst atom;
        if (acceptPunct("~")) atom.negated = true;
        atom.head = parseTerm();
        if (!atom.negated && acceptPunct("=")) atom.value = parseArith();
        return atom;
    }

    ArithExpr parseArith() {
        ArithExpr e;
        e.first = parseTerm();
        while (atPunct("+") || atPunct("-")) {
            char op = next().text[0];
            e.rest.push_back({op, parseTerm()});
        }
        return e;
    }

    Term parseTerm() {
        Term t;
        t.pos = cur().pos;
        if (at(Token::Type::Int)) {
            Token tok = next();
            t.isInt = true;
            t.value = tok.value;
            t.name = tok.text;
            return t;
        }
        if (!at(Token::Type::Ident)) fail("expected a term");
        if (isReservedWord(cur().text)) fail("unexpected keyword '" + cur().text + "'");
        t.name = next().text;
        if (acceptPunct("(")) {
            while (true) {
                t.args.push_back(parseTerm());
                if (!acceptPunct(",")) break;
            }
            expectPunct(")");
        }
        return t;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    LanguageMode mode_;
};

}  // namespace

ParseResult parse(std::string_view text, LanguageMode mode) {
    ParseResult result;
    try {
        Parser parser(tokenize(text), mode);
        result.program = parser.parseProgram();
    } catch (const LexError& e) {
        result.diagnostics.push_back({e.pos, e.what()});
    } catch (const ParseError& e) {
        result.diagnostics.push_back({e.pos, e.message});
    }
    return result;
}

}  // namespace bcplus
