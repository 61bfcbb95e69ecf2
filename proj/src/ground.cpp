#include "bcplus/ground.hpp"

#include <algorithm>
#include <set>
#include <variant>

namespace bcplus {

namespace {

using namespace ast;

struct GroundingError {
    SourcePos pos;
    std::string message;
};

// A ground object. Natural ordering sorts b(2) before b(10) and keeps bare
// integers numeric.
struct ObjectVal {
    std::string text;
    std::string base;          // name before the argument, "" for bare integers
    std::optional<long> num;   // the integer argument or value, if any

    friend bool operator==(const ObjectVal& a, const ObjectVal& b) { return a.text == b.text; }
    friend bool operator<(const ObjectVal& a, const ObjectVal& b) {
        if (a.base != b.base) return a.base < b.base;
        if (a.num.has_value() != b.num.has_value()) return a.num.has_value() < b.num.has_value();
        if (a.num && b.num && *a.num != *b.num) return *a.num < *b.num;
        return a.text < b.text;
    }
};

ObjectVal namedObject(const std::string& base, std::optional<long> arg) {
    if (!arg) return {base, base, std::nullopt};
    return {base + "(" + std::to_string(*arg) + ")", base, arg};
}

ObjectVal intObject(long v) { return {std::to_string(v), "", v}; }

struct Vacuous {};  // an instance touching an out-of-domain arithmetic value
using GroundF = std::variant<Formula, bool, Vacuous>;

bool isVacuous(const GroundF& g) { return std::holds_alternative<Vacuous>(g); }

// Positive positions: a constant false makes the law instance vacuous.
// Returns nothing when the instance should be dropped.
std::optional<Formula> positivePart(const GroundF& g) {
    if (isVacuous(g)) return std::nullopt;
    if (const bool* b = std::get_if<bool>(&g)) {
        if (!*b) return std::nullopt;
        return truth();
    }
    return std::get<Formula>(g);
}

// Negative or head positions: constants become literal truth/falsity.
std::optional<Formula> literalPart(const GroundF& g) {
    if (isVacuous(g)) return std::nullopt;
    if (const bool* b = std::get_if<bool>(&g)) return *b ? truth() : Formula::falsity();
    return std::get<Formula>(g);
}

using Env = std::map<std::string, ObjectVal>;

class Grounder {
public:
    Grounder(const ProgramAst& prog, const std::map<std::string, long>& bindings,
             LanguageMode mode)
        : prog_(prog), bindings_(bindings), mode_(mode) {}

    GroundResult run() {
        GroundResult result;
        try {
            buildSorts();
            buildConstants();
            buildVariables();
        } catch (const GroundingError& e) {
            result.diagnostics.push_back({e.pos, e.message});
            return result;
        }
        try {
            sig_ = makeSignature(decls_);
        } catch (const DeclarationError& e) {
            result.diagnostics.push_back({{}, e.what()});
            return result;
        }

        for (const LawAst& law : prog_.laws) groundLawSchema(law, result.diagnostics);
        emitDeclarationLaws(result.diagnostics);
        groundQueries(result.diagnostics);
        if (!result.diagnostics.empty()) return result;

        GroundProgram out;
        out.mode = mode_;
        out.queries = std::move(queries_);
        try {
            switch (mode_) {
                case LanguageMode::BcPlus:
                    out.description = ActionDescription(sig_, std::move(bcplusLaws_));
                    break;
                case LanguageMode::Cplus: {
                    CplusDescription src(sig_, std::move(cplusLaws_));
                    out.description = cp2bcp(src);
                    out.cplusSource = std::move(src);
                    break;
                }
                case LanguageMode::Bc: {
                    BcDescription src(sig_, std::move(bcLaws_));
                    out.description = bc2bcp(src);
                    out.bcSource = std::move(src);
                    break;
                }
            }
        } catch (const std::runtime_error& e) {
            result.diagnostics.push_back({{}, e.what()});
            return result;
        }
        result.program = std::move(out);
        return result;
    }

private:
    // ---- sorts and objects ----

    void buildSorts() {
        for (const std::string& s : prog_.sorts) declaredSorts_.insert(s);
        for (const SubsortEdge& e : prog_.subsorts) {
            if (!declaredSorts_.count(e.super) || !declaredSorts_.count(e.sub))
                throw GroundingError{e.pos, "subsort declaration over an unknown sort"};
            subsorts_[e.super].push_back(e.sub);
        }
        checkAcyclic();

        for (const ObjectDecl& decl : prog_.objects) {
            if (!declaredSorts_.count(decl.sortName))
                throw GroundingError{decl.pos, "unknown sort '" + decl.sortName + "'"};
            for (const ObjectSpec& spec : decl.specs) {
                std::vector<ObjectVal> vals;
                if (spec.range) {
                    if (spec.range->first > spec.range->second)
                        throw GroundingError{spec.pos, "empty object range"};
                    for (long v = spec.range->first; v <= spec.range->second; ++v)
                        vals.push_back(spec.name.empty() ? intObject(v) : namedObject(spec.name, v));
                } else if (spec.name.empty()) {
                    vals.push_back(intObject(*spec.intValue));
                } else {
                    vals.push_back(namedObject(spec.name, spec.intValue));
                }
                auto& direct = directObjects_[decl.sortName];
                direct.insert(direct.end(), vals.begin(), vals.end());
            }
        }
    }

    void checkAcyclic() const {
        // colors: 0 unvisited, 1 on stack, 2 done
        std::map<std::string, int> color;
        for (const std::string& s : declaredSorts_) {
            if (color[s] == 0 && cyclic(s, color))
                throw GroundingError{{}, "the subsort graph has a cycle through '" + s + "'"};
        }
    }

    bool cyclic(const std::string& s, std::map<std::string, int>& color) const {
        color[s] = 1;
        auto it = subsorts_.find(s);
        if (it != subsorts_.end())
            for (const std::string& sub : it->second) {
                if (color[sub] == 1) return true;
                if (color[sub] == 0 && cyclic(sub, color)) return true;
            }
        color[s] = 2;
        return false;
    }

    std::vector<ObjectVal> sortObjects(const std::string& sort, SourcePos pos) const {
        if (!declaredSorts_.count(sort)) throw GroundingError{pos, "unknown sort '" + sort + "'"};
        std::set<std::string> seen;
        std::vector<ObjectVal> out;
        collectObjects(sort, seen, out);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    void collectObjects(const std::string& sort, std::set<std::string>& seen,
                        std::vector<ObjectVal>& out) const {
        if (!seen.insert(sort).second) return;
        auto it = directObjects_.find(sort);
        if (it != directObjects_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
        auto subs = subsorts_.find(sort);
        if (subs != subsorts_.end())
            for (const std::string& sub : subs->second) collectObjects(sub, seen, out);
    }

    std::vector<ObjectVal> nonemptySortObjects(const std::string& sort, SourcePos pos) const {
        std::vector<ObjectVal> out = sortObjects(sort, pos);
        if (out.empty()) throw GroundingError{pos, "sort '" + sort + "' has no objects"};
        return out;
    }

    // ---- constants ----

    struct AutoLaws {
        KindKeyword kind;
        std::string constant;          // ground name
        std::string parent;            // ground parent action, attributes only
        SourcePos pos;
    };

    void buildConstants() {
        for (const ConstantDeclAst& decl : prog_.constants) {
            std::vector<std::string> domain;
            if (decl.domainSort) {
                auto objs = nonemptySortObjects(*decl.domainSort, decl.pos);
                for (const ObjectVal& o : objs) domain.push_back(o.text);
                if (decl.starred) {
                    if (std::find(domain.begin(), domain.end(), "none") != domain.end())
                        throw GroundingError{decl.pos,
                                             "sort '" + *decl.domainSort +
                                                 "' already has an object named 'none'"};
                    domain.push_back("none");
                }
            } else {
                domain = booleanDomain();
            }
            if (domain.size() < 2)
                throw GroundingError{decl.pos, "constant domain needs at least 2 values"};

            ConstantKind kind;
            switch (decl.kind) {
                case KindKeyword::SimpleFluent:
                case KindKeyword::InertialFluent: kind = ConstantKind::RegularFluent; break;
                case KindKeyword::SdFluent: kind = ConstantKind::StaticallyDeterminedFluent; break;
                default: kind = ConstantKind::Action; break;
            }
            if (decl.kind == KindKeyword::Attribute && mode_ == LanguageMode::Bc)
                throw GroundingError{decl.pos, "attributes are not available in bc mode"};

            for (const Term& schema : decl.schemas) {
                std::vector<std::string> argSorts;
                for (const Term& arg : schema.args) {
                    if (arg.isInt || !arg.args.empty())
                        throw GroundingError{arg.pos, "constant arguments must name sorts"};
                    argSorts.push_back(arg.name);
                }
                forEachTuple(argSorts, schema.pos, [&](const std::vector<ObjectVal>& tuple) {
                    std::string name = renderName(schema.name, tuple);
                    decls_.push_back({name, kind, domain});
                    if (decl.kind == KindKeyword::InertialFluent ||
                        decl.kind == KindKeyword::ExogenousAction)
                        autoLaws_.push_back({decl.kind, name, "", decl.pos});
                    if (decl.kind == KindKeyword::Attribute) {
                        if (!decl.parent)
                            throw GroundingError{decl.pos, "attribute lacks a parent action"};
                        std::string parent = renderName(decl.parent->name, tuple);
                        autoLaws_.push_back({decl.kind, name, parent, decl.pos});
                    }
                });
            }
        }
    }

    static std::string renderName(const std::string& base, const std::vector<ObjectVal>& args) {
        if (args.empty()) return base;
        std::string out = base + "(";
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) out += ",";
            out += args[i].text;
        }
        return out + ")";
    }

    template <class Fn>
    void forEachTuple(const std::vector<std::string>& sorts, SourcePos pos, Fn fn) {
        std::vector<std::vector<ObjectVal>> pools;
        for (const std::string& s : sorts) pools.push_back(nonemptySortObjects(s, pos));
        std::vector<std::size_t> idx(pools.size(), 0);
        while (true) {
            std::vector<ObjectVal> tuple;
            for (std::size_t i = 0; i < pools.size(); ++i) tuple.push_back(pools[i][idx[i]]);
            fn(tuple);
            std::size_t i = pools.size();
            while (i > 0) {
                if (++idx[i - 1] < pools[i - 1].size()) break;
                idx[i - 1] = 0;
                --i;
            }
            if (i == 0) break;
        }
    }

    void buildVariables() {
        for (const VariableDeclAst& decl : prog_.variables)
            for (const std::string& name : decl.names) {
                if (!declaredSorts_.count(decl.sortName))
                    throw GroundingError{decl.pos, "unknown sort '" + decl.sortName + "'"};
                if (!varSort_.emplace(name, decl.sortName).second)
                    throw GroundingError{decl.pos, "variable '" + name + "' declared twice"};
            }
    }

    // ---- term and formula instantiation ----

    const ObjectVal& lookupVar(const std::string& name, SourcePos pos, const Env& env) const {
        auto it = env.find(name);
        if (it == env.end()) throw GroundingError{pos, "unbound variable '" + name + "'"};
        return it->second;
    }

    ObjectVal resolveTerm(const Term& t, const Env& env) const {
        if (t.isInt) return intObject(t.value);
        if (varSort_.count(t.name)) {
            if (!t.args.empty())
                throw GroundingError{t.pos, "variable '" + t.name + "' cannot take arguments"};
            return lookupVar(t.name, t.pos, env);
        }
        if (t.args.empty()) return namedObject(t.name, std::nullopt);
        std::vector<ObjectVal> args;
        for (const Term& a : t.args) args.push_back(resolveTerm(a, env));
        ObjectVal out;
        out.text = renderName(t.name, args);
        out.base = t.name;
        if (args.size() == 1 && args[0].num && args[0].base.empty()) out.num = args[0].num;
        return out;
    }

    std::string groundConstantName(const Term& head, const Env& env) const {
        std::vector<ObjectVal> args;
        for (const Term& a : head.args) args.push_back(resolveTerm(a, env));
        std::string name = renderName(head.name, args);
        if (!sig_->hasConstant(name))
            throw GroundingError{head.pos, "unknown constant '" + name + "'"};
        return name;
    }

    struct Value {
        std::string text;
        bool usedArith = false;
    };

    long numericOperand(const Term& t, const Env& env) const {
        if (t.isInt) return t.value;
        if (varSort_.count(t.name)) {
            const ObjectVal& v = lookupVar(t.name, t.pos, env);
            if (!v.num || !v.base.empty())
                throw GroundingError{t.pos, "'" + v.text + "' is not an integer"};
            return *v.num;
        }
        auto it = bindings_.find(t.name);
        if (it == bindings_.end())
            throw GroundingError{t.pos, "unbound symbolic constant '" + t.name + "'"};
        return it->second;
    }

    Value resolveValue(const ArithExpr& e, const Env& env) const {
        if (e.isPlain() && !e.first.isInt) {
            const Term& t = e.first;
            if (varSort_.count(t.name)) return {lookupVar(t.name, t.pos, env).text, false};
            if (t.args.empty() && bindings_.count(t.name))
                return {std::to_string(bindings_.at(t.name)), false};
            return {resolveTerm(t, env).text, false};
        }
        long acc = numericOperand(e.first, env);
        for (const auto& [op, t] : e.rest) {
            long v = numericOperand(t, env);
            acc = op == '+' ? acc + v : acc - v;
        }
        return {std::to_string(acc), !e.isPlain() || e.first.isInt};
    }

    // Atom instances with out-of-domain arithmetic values are vacuous; any
    // other domain mismatch is an error.
    std::variant<Atom, Vacuous> groundAtom(const AtomAst& atom, const Env& env) const {
        std::string name = groundConstantName(atom.head, env);
        const ConstantDecl* decl = sig_->find(name);
        if (!atom.value) {
            if (!decl->isBoolean())
                throw GroundingError{atom.head.pos,
                                     "constant '" + name + "' is not Boolean; specify a value"};
            return Atom{name, atom.negated ? "f" : "t"};
        }
        Value v = resolveValue(*atom.value, env);
        if (std::find(decl->domain.begin(), decl->domain.end(), v.text) == decl->domain.end()) {
            if (v.usedArith) return Vacuous{};
            throw GroundingError{atom.head.pos,
                                 "value '" + v.text + "' is not in the domain of '" + name + "'"};
        }
        return Atom{name, v.text};
    }

    GroundF groundFormula(const FormulaAst& f, const Env& env) const {
        switch (f.kind) {
            case FormulaAst::Kind::Atom: {
                auto a = groundAtom(f.atom, env);
                if (std::holds_alternative<Vacuous>(a)) return Vacuous{};
                return Formula::atom(std::get<Atom>(a));
            }
            case FormulaAst::Kind::Diseq: {
                ObjectVal l = resolveTerm(f.diseq.lhs, env);
                ObjectVal r = resolveTerm(f.diseq.rhs, env);
                return l.text != r.text;
            }
            case FormulaAst::Kind::Card: return groundCardinality(f, env);
            case FormulaAst::Kind::Unary: {
                GroundF inner = groundFormula(*f.lhs, env);
                if (isVacuous(inner)) return Vacuous{};
                if (const bool* b = std::get_if<bool>(&inner)) return !*b;
                return neg(std::get<Formula>(inner));
            }
            case FormulaAst::Kind::Binary: {
                GroundF l = groundFormula(*f.lhs, env);
                GroundF r = groundFormula(*f.rhs, env);
                if (isVacuous(l) || isVacuous(r)) return Vacuous{};
                return combine(f.op, l, r);
            }
        }
        return Vacuous{};
    }

    static GroundF combine(FormulaOp op, const GroundF& l, const GroundF& r) {
        const bool* lb = std::get_if<bool>(&l);
        const bool* rb = std::get_if<bool>(&r);
        switch (op) {
            case FormulaOp::And:
                if (lb) return *lb ? r : GroundF(false);
                if (rb) return *rb ? l : GroundF(false);
                return Formula::conj(std::get<Formula>(l), std::get<Formula>(r));
            case FormulaOp::Or:
                if (lb) return *lb ? GroundF(true) : r;
                if (rb) return *rb ? GroundF(true) : l;
                return Formula::disj(std::get<Formula>(l), std::get<Formula>(r));
            case FormulaOp::Iff:
                if (lb && rb) return *lb == *rb;
                if (lb) return *lb ? r : negate(r);
                if (rb) return *rb ? l : negate(l);
                return iff(std::get<Formula>(l), std::get<Formula>(r));
            case FormulaOp::Neg: break;
        }
        return Vacuous{};
    }

    static GroundF negate(const GroundF& g) {
        if (const bool* b = std::get_if<bool>(&g)) return !*b;
        return neg(std::get<Formula>(g));
    }

    GroundF groundCardinality(const FormulaAst& f, const Env& env) const {
        if (mode_ == LanguageMode::Bc)
            throw GroundingError{f.pos, "cardinality sets are not available in bc mode"};
        const CardinalityAst& card = f.card;
        auto sortIt = varSort_.find(card.var);
        if (sortIt == varSort_.end())
            throw GroundingError{f.pos, "undeclared set variable '" + card.var + "'"};
        long bound;
        if (card.bound.isInt) {
            bound = card.bound.value;
        } else {
            auto it = bindings_.find(card.bound.name);
            if (it == bindings_.end())
                throw GroundingError{card.bound.pos,
                                     "unbound symbolic constant '" + card.bound.name + "'"};
            bound = it->second;
        }
        std::vector<Atom> atoms;
        for (const ObjectVal& obj : nonemptySortObjects(sortIt->second, f.pos)) {
            Env local = env;
            local[card.var] = obj;
            auto a = groundAtom(card.condition, local);
            if (std::holds_alternative<Atom>(a)) atoms.push_back(std::get<Atom>(a));
        }
        try {
            return expandCardinality(std::nullopt, atoms, static_cast<int>(bound));
        } catch (const CardinalityLimitError& e) {
            throw GroundingError{f.pos, e.what()};
        }
    }

    // ---- law schemas ----

    void collectFreeVars(const FormulaAst& f, std::set<std::string>& shadowed,
                         std::set<std::string>& out) const {
        switch (f.kind) {
            case FormulaAst::Kind::Atom: collectTermVars(f.atom, shadowed, out); break;
            case FormulaAst::Kind::Diseq:
                collectVarsIn(f.diseq.lhs, shadowed, out);
                collectVarsIn(f.diseq.rhs, shadowed, out);
                break;
            case FormulaAst::Kind::Card: {
                bool inserted = shadowed.insert(f.card.var).second;
                collectTermVars(f.card.condition, shadowed, out);
                if (inserted) shadowed.erase(f.card.var);
                break;
            }
            case FormulaAst::Kind::Unary: collectFreeVars(*f.lhs, shadowed, out); break;
            case FormulaAst::Kind::Binary:
                collectFreeVars(*f.lhs, shadowed, out);
                collectFreeVars(*f.rhs, shadowed, out);
                break;
        }
    }

    void collectTermVars(const AtomAst& a, std::set<std::string>& shadowed,
                         std::set<std::string>& out) const {
        collectVarsIn(a.head, shadowed, out);
        if (a.value) {
            collectVarsIn(a.value->first, shadowed, out);
            for (const auto& [op, t] : a.value->rest) collectVarsIn(t, shadowed, out);
        }
    }

    void collectVarsIn(const Term& t, std::set<std::string>& shadowed,
                       std::set<std::string>& out) const {
        if (!t.isInt && varSort_.count(t.name) && !shadowed.count(t.name)) out.insert(t.name);
        for (const Term& a : t.args) collectVarsIn(a, shadowed, out);
    }

    std::set<std::string> lawFreeVars(const LawAst& law) const {
        std::set<std::string> out, shadowed;
        for (const auto& part : {law.head, law.ifPart, law.afterPart, law.ifconsPart})
            if (part) collectFreeVars(**part, shadowed, out);
        if (law.headAtom) collectTermVars(*law.headAtom, shadowed, out);
        if (law.constant) collectVarsIn(*law.constant, shadowed, out);
        return out;
    }

    void groundLawSchema(const LawAst& law, std::vector<Diagnostic>& diags) {
        std::set<std::string> freeVars;
        try {
            freeVars = lawFreeVars(law);
        } catch (const GroundingError& e) {
            diags.push_back({e.pos, e.message});
            return;
        }
        std::vector<std::string> vars(freeVars.begin(), freeVars.end());
        std::vector<std::vector<ObjectVal>> pools;
        try {
            for (const std::string& v : vars)
                pools.push_back(nonemptySortObjects(varSort_.at(v), law.pos));
        } catch (const GroundingError& e) {
            diags.push_back({e.pos, e.message});
            return;
        }

        std::vector<std::size_t> idx(vars.size(), 0);
        while (true) {
            Env env;
            for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = pools[i][idx[i]];
            try {
                groundOneLaw(law, env);
            } catch (const GroundingError& e) {
                diags.push_back({e.pos, e.message});
                return;  // one report per schema
            } catch (const ValidationError& e) {
                diags.push_back({law.pos, e.what()});
                return;
            }
            std::size_t i = vars.size();
            while (i > 0) {
                if (++idx[i - 1] < pools[i - 1].size()) break;
                idx[i - 1] = 0;
                --i;
            }
            if (i == 0) break;
        }
    }

    std::optional<Formula> part(const std::optional<FormulaPtr>& f, const Env& env,
                                bool positive) const {
        if (!f) return truth();
        GroundF g = groundFormula(**f, env);
        return positive ? positivePart(g) : literalPart(g);
    }

    void groundOneLaw(const LawAst& law, const Env& env) {
        switch (mode_) {
            case LanguageMode::BcPlus: groundBcPlusLaw(law, env); break;
            case LanguageMode::Cplus: groundCplusLaw(law, env); break;
            case LanguageMode::Bc: groundBcLaw(law, env); break;
        }
    }

    void appendExpansion(const Abbreviation& ab) {
        auto laws = expandAbbreviation(ab, *sig_);
        appendBcPlus(std::move(laws));
    }

    void appendBcPlus(std::vector<CausalLaw> laws) {
        for (CausalLaw& law : laws) {
            if (isFalsity(law.ifPart)) continue;
            if (law.afterPart && isFalsity(*law.afterPart)) continue;
            bcplusLaws_.push_back(std::move(law));
        }
    }

    void groundBcPlusLaw(const LawAst& law, const Env& env) {
        switch (law.kind) {
            case LawKeyword::Caused: {
                auto head = part(law.head, env, false);
                auto ifF = part(law.ifPart, env, true);
                if (!head || !ifF) return;
                if (law.afterPart) {
                    auto afterF = part(law.afterPart, env, true);
                    if (!afterF) return;
                    appendBcPlus({fluentDynamicLaw(*head, *ifF, *afterF)});
                } else if (isActionFormulaIn(*head)) {
                    appendBcPlus({actionDynamicLaw(*head, *ifF)});
                } else {
                    appendBcPlus({staticLaw(*head, *ifF)});
                }
                return;
            }
            case LawKeyword::Default: {
                auto headAtom = groundAtom(*law.headAtom, env);
                if (std::holds_alternative<Vacuous>(headAtom)) return;
                auto ifF = part(law.ifPart, env, true);
                if (!ifF) return;
                std::optional<Formula> afterF;
                if (law.afterPart) {
                    afterF = part(law.afterPart, env, true);
                    if (!afterF) return;
                }
                appendExpansion(DefaultLaw{std::get<Atom>(headAtom), *ifF, afterF});
                return;
            }
            case LawKeyword::Causes: {
                Atom actor = requireBareAction(*law.headAtom, env);
                auto effect = part(law.head, env, false);
                if (!effect) return;
                std::optional<Formula> cond;
                if (law.ifPart) {
                    auto c = part(law.ifPart, env, true);
                    if (!c) return;
                    cond = *c;
                }
                appendExpansion(CausesLaw{actor.constant, *effect, cond});
                return;
            }
            case LawKeyword::Exogenous:
                appendExpansion(ExogenousLaw{groundConstantName(*law.constant, env)});
                return;
            case LawKeyword::Inertial:
                appendExpansion(InertialLaw{groundConstantName(*law.constant, env)});
                return;
            case LawKeyword::Constraint: {
                auto f = part(law.head, env, false);
                if (!f) return;
                appendExpansion(ConstraintLaw{*f});
                return;
            }
            case LawKeyword::Always: {
                auto f = part(law.head, env, false);
                if (!f) return;
                appendExpansion(AlwaysLaw{*f});
                return;
            }
            case LawKeyword::Nonexecutable: {
                auto what = part(law.head, env, true);
                if (!what) return;
                std::optional<Formula> cond;
                if (law.ifPart) {
                    auto c = part(law.ifPart, env, true);
                    if (!c) return;
                    cond = *c;
                }
                appendExpansion(NonexecutableLaw{*what, cond});
                return;
            }
            case LawKeyword::BcRule:
                throw GroundingError{law.pos, "bc laws are not available in this mode"};
        }
    }

    bool isActionFormulaIn(const Formula& f) const {
        bool action = false, fluent = false;
        for (const Atom& a : atomsOf(f)) {
            const ConstantDecl* c = sig_->find(a.constant);
            if (!c) continue;
            (c->kind == ConstantKind::Action ? action : fluent) = true;
        }
        return action && !fluent;
    }

    Atom requireBareAction(const AtomAst& atom, const Env& env) const {
        auto a = groundAtom(atom, env);
        if (!std::holds_alternative<Atom>(a))
            throw GroundingError{atom.head.pos, "the acting constant is out of domain"};
        Atom actor = std::get<Atom>(a);
        const ConstantDecl* decl = sig_->find(actor.constant);
        if (!decl || decl->kind != ConstantKind::Action || !decl->isBoolean() ||
            actor.value != "t")
            throw GroundingError{atom.head.pos,
                                 "'causes' requires a Boolean action constant on the left"};
        return actor;
    }

    // C+ mode reads the same abbreviations with the self-supporting bodies
    // of that language: defaults become caused c=v if c=v, inertia becomes
    // caused c=v if c=v after c=v.
    void appendCplus(std::vector<CausalLaw> laws) {
        for (CausalLaw& law : laws) {
            if (isFalsity(law.ifPart)) continue;
            if (law.afterPart && isFalsity(*law.afterPart)) continue;
            if (auto diag = validateLaw(law, *sig_)) throw ValidationError(*diag);
            cplusLaws_.push_back(std::move(law));
        }
    }

    void groundCplusLaw(const LawAst& law, const Env& env) {
        switch (law.kind) {
            case LawKeyword::Caused: {
                auto head = part(law.head, env, false);
                auto ifF = part(law.ifPart, env, true);
                if (!head || !ifF) return;
                if (law.afterPart) {
                    auto afterF = part(law.afterPart, env, true);
                    if (!afterF) return;
                    appendCplus({fluentDynamicLaw(*head, *ifF, *afterF)});
                } else if (isActionFormulaIn(*head)) {
                    appendCplus({actionDynamicLaw(*head, *ifF)});
                } else {
                    appendCplus({staticLaw(*head, *ifF)});
                }
                return;
            }
            case LawKeyword::Default: {
                auto headAtom = groundAtom(*law.headAtom, env);
                if (std::holds_alternative<Vacuous>(headAtom)) return;
                Atom a = std::get<Atom>(headAtom);
                auto ifF = part(law.ifPart, env, true);
                if (!ifF) return;
                Formula body = isTruth(*ifF) ? Formula::atom(a)
                                             : Formula::conj(Formula::atom(a), *ifF);
                const ConstantDecl* decl = sig_->find(a.constant);
                if (law.afterPart) {
                    auto afterF = part(law.afterPart, env, true);
                    if (!afterF) return;
                    appendCplus({fluentDynamicLaw(Formula::atom(a), body, *afterF)});
                } else if (decl && decl->kind == ConstantKind::Action) {
                    appendCplus({actionDynamicLaw(Formula::atom(a), body)});
                } else {
                    appendCplus({staticLaw(Formula::atom(a), body)});
                }
                return;
            }
            case LawKeyword::Causes: {
                Atom actor = requireBareAction(*law.headAtom, env);
                auto effect = part(law.head, env, false);
                if (!effect) return;
                Formula after = Formula::atom(actor);
                if (law.ifPart) {
                    auto c = part(law.ifPart, env, true);
                    if (!c) return;
                    after = Formula::conj(after, *c);
                }
                appendCplus({fluentDynamicLaw(*effect, truth(), after)});
                return;
            }
            case LawKeyword::Exogenous: {
                std::string name = groundConstantName(*law.constant, env);
                const ConstantDecl* decl = sig_->find(name);
                if (decl->kind != ConstantKind::Action)
                    throw GroundingError{law.pos, "'exogenous' requires an action constant"};
                for (const std::string& v : decl->domain) {
                    Formula a = Formula::atom({name, v});
                    appendCplus({actionDynamicLaw(a, a)});
                }
                return;
            }
            case LawKeyword::Inertial: {
                std::string name = groundConstantName(*law.constant, env);
                const ConstantDecl* decl = sig_->find(name);
                if (decl->kind != ConstantKind::RegularFluent)
                    throw GroundingError{law.pos, "'inertial' requires a regular fluent constant"};
                for (const std::string& v : decl->domain) {
                    Formula a = Formula::atom({name, v});
                    appendCplus({fluentDynamicLaw(a, a, a)});
                }
                return;
            }
            case LawKeyword::Constraint: {
                auto f = part(law.head, env, false);
                if (!f) return;
                appendCplus({staticLaw(Formula::falsity(), neg(*f))});
                return;
            }
            case LawKeyword::Always: {
                auto f = part(law.head, env, false);
                if (!f) return;
                appendCplus({fluentDynamicLaw(Formula::falsity(), truth(), neg(*f))});
                return;
            }
            case LawKeyword::Nonexecutable: {
                auto what = part(law.head, env, true);
                if (!what) return;
                Formula after = *what;
                if (law.ifPart) {
                    auto c = part(law.ifPart, env, true);
                    if (!c) return;
                    after = Formula::conj(after, *c);
                }
                appendCplus({fluentDynamicLaw(Formula::falsity(), truth(), after)});
                return;
            }
            case LawKeyword::BcRule:
                throw GroundingError{law.pos, "bc laws are not available in this mode"};
        }
    }

    // ---- bc mode ----

    std::vector<Atom> atomConjunction(const std::optional<FormulaPtr>& f, const Env& env,
                                      SourcePos pos, bool* vacuous) {
        std::vector<Atom> out;
        if (!f) return out;
        GroundF g = groundFormula(**f, env);
        if (isVacuous(g)) {
            *vacuous = true;
            return out;
        }
        if (const bool* b = std::get_if<bool>(&g)) {
            if (!*b) *vacuous = true;  // a false side condition drops the instance
            return out;
        }
        collectAtomConjuncts(std::get<Formula>(g), pos, out);
        return out;
    }

    void collectAtomConjuncts(const Formula& f, SourcePos pos, std::vector<Atom>& out) {
        if (f.kind() == FormulaKind::And) {
            collectAtomConjuncts(f.left(), pos, out);
            collectAtomConjuncts(f.right(), pos, out);
            return;
        }
        if (isTruth(f)) return;
        if (f.kind() != FormulaKind::AtomRef)
            throw GroundingError{pos, "bc law bodies are conjunctions of atoms"};
        out.push_back(f.atom());
    }

    void groundBcLaw(const LawAst& law, const Env& env) {
        switch (law.kind) {
            case LawKeyword::BcRule: {
                auto head = groundAtom(*law.headAtom, env);
                if (std::holds_alternative<Vacuous>(head)) return;
                bool vacuous = false;
                std::vector<Atom> ifAtoms = atomConjunction(law.ifPart, env, law.pos, &vacuous);
                std::vector<Atom> afterAtoms =
                    atomConjunction(law.afterPart, env, law.pos, &vacuous);
                std::vector<Atom> ifconsAtoms =
                    atomConjunction(law.ifconsPart, env, law.pos, &vacuous);
                if (vacuous) return;
                if (law.afterPart && law.ifPart)
                    throw GroundingError{law.pos, "bc dynamic laws take 'after' and 'ifcons' only"};
                if (law.afterPart)
                    bcLaws_.push_back(
                        {BcLaw::Form::Dynamic, std::get<Atom>(head), afterAtoms, ifconsAtoms});
                else
                    bcLaws_.push_back(
                        {BcLaw::Form::Static, std::get<Atom>(head), ifAtoms, ifconsAtoms});
                return;
            }
            case LawKeyword::Default: {
                auto head = groundAtom(*law.headAtom, env);
                if (std::holds_alternative<Vacuous>(head)) return;
                Atom a = std::get<Atom>(head);
                bool vacuous = false;
                std::vector<Atom> afterAtoms =
                    atomConjunction(law.afterPart, env, law.pos, &vacuous);
                if (vacuous) return;
                if (law.afterPart)
                    bcLaws_.push_back({BcLaw::Form::Dynamic, a, afterAtoms, {a}});
                else
                    bcLaws_.push_back({BcLaw::Form::Static, a, {}, {a}});
                return;
            }
            case LawKeyword::Causes: {
                Atom actor = requireBareAction(*law.headAtom, env);
                GroundF effect = groundFormula(**law.head, env);
                if (isVacuous(effect)) return;
                const Formula* ef = std::get_if<Formula>(&effect);
                if (!ef || ef->kind() != FormulaKind::AtomRef)
                    throw GroundingError{law.pos, "bc effects are single atoms"};
                bool vacuous = false;
                std::vector<Atom> ifAtoms = atomConjunction(law.ifPart, env, law.pos, &vacuous);
                if (vacuous) return;
                std::vector<Atom> body{actor};
                body.insert(body.end(), ifAtoms.begin(), ifAtoms.end());
                bcLaws_.push_back({BcLaw::Form::Dynamic, ef->atom(), body, {}});
                return;
            }
            case LawKeyword::Inertial: {
                std::string name = groundConstantName(*law.constant, env);
                const ConstantDecl* decl = sig_->find(name);
                if (decl->kind != ConstantKind::RegularFluent)
                    throw GroundingError{law.pos, "'inertial' requires a regular fluent constant"};
                for (const std::string& v : decl->domain) {
                    Atom a{name, v};
                    bcLaws_.push_back({BcLaw::Form::Dynamic, a, {a}, {a}});
                }
                return;
            }
            case LawKeyword::Exogenous:
                // Actions take arbitrary values under the bc translation
                // already; the declaration adds nothing.
                groundConstantName(*law.constant, env);
                return;
            default:
                throw GroundingError{law.pos, "this law form is not available in bc mode"};
        }
    }

    // ---- declaration-driven laws ----

    void emitDeclarationLaws(std::vector<Diagnostic>& diags) {
        for (const AutoLaws& d : autoLaws_) {
            try {
                switch (d.kind) {
                    case KindKeyword::InertialFluent:
                        if (mode_ == LanguageMode::BcPlus)
                            appendExpansion(InertialLaw{d.constant});
                        else if (mode_ == LanguageMode::Cplus)
                            groundCplusInertial(d.constant);
                        else
                            groundBcInertial(d.constant);
                        break;
                    case KindKeyword::ExogenousAction:
                        if (mode_ == LanguageMode::BcPlus)
                            appendExpansion(ExogenousLaw{d.constant});
                        else if (mode_ == LanguageMode::Cplus)
                            groundCplusExogenous(d.constant);
                        break;  // bc: actions are exogenous by translation
                    case KindKeyword::Attribute: emitAttribute(d); break;
                    default: break;
                }
            } catch (const std::runtime_error& e) {
                diags.push_back({d.pos, e.what()});
            } catch (const GroundingError& e) {
                diags.push_back({e.pos, e.message});
            }
        }
    }

    void groundCplusInertial(const std::string& name) {
        for (const std::string& v : sig_->find(name)->domain) {
            Formula a = Formula::atom({name, v});
            appendCplus({fluentDynamicLaw(a, a, a)});
        }
    }

    void groundCplusExogenous(const std::string& name) {
        for (const std::string& v : sig_->find(name)->domain) {
            Formula a = Formula::atom({name, v});
            appendCplus({actionDynamicLaw(a, a)});
        }
    }

    void groundBcInertial(const std::string& name) {
        for (const std::string& v : sig_->find(name)->domain) {
            Atom a{name, v};
            bcLaws_.push_back({BcLaw::Form::Dynamic, a, {a}, {a}});
        }
    }

    // Ties an attribute to its action: the attribute reads `none` exactly
    // when the action does not occur. The biconditional is split into two
    // falsity-headed laws with literal bodies, which is classically equal
    // and, under a falsity head, interchangeable; the split keeps grounded
    // descriptions inside the simple fragment.
    void emitAttribute(const AutoLaws& d) {
        const ConstantDecl* parent = sig_->find(d.parent);
        if (!parent || parent->kind != ConstantKind::Action || !parent->isBoolean())
            throw GroundingError{d.pos,
                                 "attribute parent '" + d.parent + "' is not a Boolean action"};
        Formula noneAtom = Formula::atom({d.constant, "none"});
        Formula parentOn = Formula::atom({d.parent, "t"});
        CausalLaw idleMismatch = fluentDynamicLaw(Formula::falsity(), truth(),
                                                  Formula::conj(noneAtom, parentOn));
        CausalLaw activeMismatch = fluentDynamicLaw(Formula::falsity(), truth(),
                                                    Formula::conj(neg(noneAtom), neg(parentOn)));
        idleMismatch.surface = activeMismatch.surface =
            "attribute " + d.constant + " of " + d.parent;
        if (mode_ == LanguageMode::BcPlus) {
            appendExpansion(ExogenousLaw{d.constant});
            appendBcPlus({idleMismatch, activeMismatch});
        } else {
            groundCplusExogenous(d.constant);
            appendCplus({idleMismatch, activeMismatch});
        }
    }

    // ---- queries ----

    void groundQueries(std::vector<Diagnostic>& diags) {
        std::set<std::string> labels;
        for (const QueryAst& q : prog_.queries) {
            if (!labels.insert(q.label).second) {
                diags.push_back({q.pos, "duplicate query label '" + q.label + "'"});
                continue;
            }
            QuerySpec spec;
            spec.label = q.label;
            if (q.maxstep) spec.maxstep = static_cast<int>(*q.maxstep);
            bool bad = false;
            for (const QueryLine& line : q.lines) {
                try {
                    GroundF g = groundFormula(*line.formula, Env{});
                    auto f = literalPart(g);
                    if (!f) throw GroundingError{line.pos, "query constraint is vacuous"};
                    spec.constraints.push_back(
                        {{line.atMaxstep, static_cast<int>(line.step)}, *f});
                } catch (const GroundingError& e) {
                    diags.push_back({e.pos, e.message});
                    bad = true;
                }
            }
            if (!bad) queries_.push_back(std::move(spec));
        }
    }

    const ProgramAst& prog_;
    std::map<std::string, long> bindings_;
    LanguageMode mode_;

    std::set<std::string> declaredSorts_;
    std::map<std::string, std::vector<std::string>> subsorts_;  // super -> subs
    std::map<std::string, std::vector<ObjectVal>> directObjects_;
    std::map<std::string, std::string> varSort_;

    std::vector<ConstantDecl> decls_;
    SignaturePtr sig_;
    std::vector<AutoLaws> autoLaws_;

    std::vector<CausalLaw> bcplusLaws_;
    std::vector<CausalLaw> cplusLaws_;
    std::vector<BcLaw> bcLaws_;
    std::vector<QuerySpec> queries_;
};

}  // namespace

GroundResult ground(const ast::ProgramAst& prog, const std::map<std::string, long>& bindings,
                    LanguageMode mode) {
    return Grounder(prog, bindings, mode).run();
}

}  // namespace bcplus
