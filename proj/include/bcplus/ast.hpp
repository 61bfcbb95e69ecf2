#ifndef BCPLUS_AST_HPP
#define BCPLUS_AST_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bcplus {

enum class LanguageMode { BcPlus, Bc, Cplus };

struct SourcePos {
    int line = 0;
    int col = 0;
};

struct Diagnostic {
    SourcePos pos;
    std::string message;
};

std::string toText(const Diagnostic& d);

namespace ast {

/// An identifier or integer, possibly applied to arguments: b, b(3), loc(B).
struct Term {
    std::string name;
    bool isInt = false;
    long value = 0;
    std::vector<Term> args;
    SourcePos pos;
};

std::string toText(const Term& t);

/// Value expressions admit + and - chains over terms: x, x+k, 10-2.
struct ArithExpr {
    Term first;
    std::vector<std::pair<char, Term>> rest;

    bool isPlain() const { return rest.empty(); }
};

struct AtomAst {
    Term head;
    std::optional<ArithExpr> value;  // absent: Boolean shorthand
    bool negated = false;            // ~c(X), Boolean false shorthand
};

struct FormulaAst;
using FormulaPtr = std::shared_ptr<FormulaAst>;

/// Conditional cardinality set {V | condition} bound, an upper-bound count
/// aggregate over the instances of the condition atom.
struct CardinalityAst {
    std::string var;
    AtomAst condition;
    Term bound;  // integer literal or symbolic constant
};

struct DiseqAst {
    Term lhs, rhs;
};

enum class FormulaOp { Neg, And, Or, Iff };

struct FormulaAst {
    enum class Kind { Atom, Card, Diseq, Unary, Binary };
    Kind kind = Kind::Atom;
    AtomAst atom;          // Kind::Atom
    CardinalityAst card;   // Kind::Card
    DiseqAst diseq;        // Kind::Diseq
    FormulaOp op = FormulaOp::Neg;
    FormulaPtr lhs, rhs;   // Unary uses lhs only
    SourcePos pos;
};

struct SubsortEdge {
    std::string super, sub;
    SourcePos pos;
};

struct ObjectSpec {
    std::string name;                            // empty for bare integer specs
    std::optional<std::pair<long, long>> range;  // b(1..10) or 1..10
    std::optional<long> intValue;                // b(3) or a bare integer
    SourcePos pos;
};

struct ObjectDecl {
    std::vector<ObjectSpec> specs;
    std::string sortName;
    SourcePos pos;
};

enum class KindKeyword {
    SimpleFluent,
    InertialFluent,
    SdFluent,
    Action,
    ExogenousAction,
    Attribute,
};

struct ConstantDeclAst {
    std::vector<Term> schemas;  // argument positions name sorts: loc(block)
    KindKeyword kind = KindKeyword::SimpleFluent;
    std::optional<std::string> domainSort;  // absent: Boolean
    bool starred = false;                   // attribute(location*)
    std::optional<Term> parent;             // attribute ... of move(block)
    SourcePos pos;
};

struct VariableDeclAst {
    std::vector<std::string> names;
    std::string sortName;
    SourcePos pos;
};

enum class LawKeyword {
    Caused,
    Default,
    Causes,
    Exogenous,
    Inertial,
    Constraint,
    Always,
    Nonexecutable,
    BcRule,
};

struct LawAst {
    LawKeyword kind = LawKeyword::Caused;
    std::optional<FormulaPtr> head;      // caused/constraint/always/nonexecutable; causes effect
    std::optional<AtomAst> headAtom;     // default head; causes actor; bc rule head
    std::optional<Term> constant;        // exogenous/inertial
    std::optional<FormulaPtr> ifPart;
    std::optional<FormulaPtr> afterPart;
    std::optional<FormulaPtr> ifconsPart;  // bc mode only
    SourcePos pos;
};

struct QueryLine {
    bool atMaxstep = false;
    long step = 0;
    FormulaPtr formula;
    SourcePos pos;
};

struct QueryAst {
    std::string label;
    std::optional<long> maxstep;
    std::vector<QueryLine> lines;
    SourcePos pos;
};

struct ProgramAst {
    std::vector<std::string> sorts;
    std::vector<SubsortEdge> subsorts;
    std::vector<ObjectDecl> objects;
    std::vector<ConstantDeclAst> constants;
    std::vector<VariableDeclAst> variables;
    std::vector<LawAst> laws;
    std::vector<QueryAst> queries;
};

}  // namespace ast
}  // namespace bcplus

#endif
