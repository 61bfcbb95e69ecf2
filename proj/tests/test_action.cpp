#include <doctest.h>

#include "bcplus/action.hpp"
#include "support/gen.hpp"

using namespace bcplus;

namespace {

// p: Boolean regular fluent, n: Boolean statically determined, a1/a2: actions.
SignaturePtr mixedSignature() {
    return makeSignature({
        {"p", ConstantKind::RegularFluent, booleanDomain()},
        {"n", ConstantKind::StaticallyDeterminedFluent, booleanDomain()},
        {"a1", ConstantKind::Action, booleanDomain()},
        {"a2", ConstantKind::Action, booleanDomain()},
    });
}

}  // namespace

TEST_CASE("law validation provisos") {
    SignaturePtr sig = mixedSignature();
    Formula p = Formula::atom({"p", "t"});
    Formula n = Formula::atom({"n", "t"});
    Formula a1 = Formula::atom({"a1", "t"});
    Formula a2 = Formula::atom({"a2", "t"});

    SUBCASE("action constant in a static head") {
        auto diag = validateLaw(staticLaw(a1, truth()), *sig);
        REQUIRE(diag.has_value());
        CHECK(diag->find("action constant 'a1'") != std::string::npos);
        CHECK(diag->find("static") != std::string::npos);
    }

    SUBCASE("statically determined constant heading a fluent dynamic law") {
        auto diag = validateLaw(fluentDynamicLaw(n, truth(), a1), *sig);
        REQUIRE(diag.has_value());
        CHECK(diag->find("statically determined constant 'n'") != std::string::npos);
    }

    SUBCASE("action formulas may sit under after") {
        CausalLaw law = fluentDynamicLaw(Formula::falsity(), truth(), Formula::conj(a1, neg(a2)));
        CHECK_FALSE(validateLaw(law, *sig).has_value());
    }

    SUBCASE("action dynamic heads must mention an action") {
        auto diag = validateLaw(actionDynamicLaw(p, truth()), *sig);
        REQUIRE(diag.has_value());
        auto diag2 = validateLaw(actionDynamicLaw(Formula::conj(a1, p), truth()), *sig);
        CHECK(diag2.has_value());
        CHECK_FALSE(validateLaw(actionDynamicLaw(choice(a1), truth()), *sig).has_value());
    }

    SUBCASE("undeclared atoms are reported") {
        auto diag = validateLaw(staticLaw(Formula::atom({"q", "t"}), truth()), *sig);
        REQUIRE(diag.has_value());
        CHECK(diag->find("undeclared") != std::string::npos);
    }

    SUBCASE("an invalid law fails description construction") {
        CHECK_THROWS_AS(ActionDescription(sig, {staticLaw(a1, truth())}), ValidationError);
    }
}

TEST_CASE("abbreviation expansion") {
    SignaturePtr sig = makeSignature({
        {"loc", ConstantKind::RegularFluent, {"b1", "b2", "table"}},
        {"amount", ConstantKind::RegularFluent, {"0", "1", "2"}},
        {"flip", ConstantKind::Action, booleanDomain()},
        {"sd", ConstantKind::StaticallyDeterminedFluent, booleanDomain()},
    });

    SUBCASE("inertial emits one choice law per value") {
        auto laws = expandAbbreviation(InertialLaw{"loc"}, *sig);
        REQUIRE(laws.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            Atom v{"loc", sig->find("loc")->domain[i]};
            CHECK(laws[i].form == LawForm::FluentDynamic);
            CHECK(structurallyEqual(laws[i].head, choice(Formula::atom(v))));
            CHECK(structurallyEqual(laws[i].ifPart, truth()));
            CHECK(structurallyEqual(*laws[i].afterPart, Formula::atom(v)));
        }
        CHECK_THROWS_AS(expandAbbreviation(InertialLaw{"flip"}, *sig), ValidationError);
        CHECK_THROWS_AS(expandAbbreviation(InertialLaw{"sd"}, *sig), ValidationError);
    }

    SUBCASE("exogenous emits action dynamic defaults") {
        auto laws = expandAbbreviation(ExogenousLaw{"flip"}, *sig);
        REQUIRE(laws.size() == 2);
        CHECK(laws[0].form == LawForm::ActionDynamic);
        CHECK(structurallyEqual(laws[0].head, choice(Formula::atom({"flip", "t"}))));
        CHECK(structurallyEqual(laws[1].head, choice(Formula::atom({"flip", "f"}))));
        CHECK_THROWS_AS(expandAbbreviation(ExogenousLaw{"loc"}, *sig), ValidationError);
    }

    SUBCASE("default with an after part") {
        auto laws = expandAbbreviation(
            DefaultLaw{{"amount", "1"}, truth(), Formula::atom({"amount", "2"})}, *sig);
        REQUIRE(laws.size() == 1);
        CHECK(laws[0].form == LawForm::FluentDynamic);
        CHECK(structurallyEqual(laws[0].head, choice(Formula::atom({"amount", "1"}))));
        CHECK(structurallyEqual(*laws[0].afterPart, Formula::atom({"amount", "2"})));
    }

    SUBCASE("default on a statically determined fluent stays static") {
        auto laws = expandAbbreviation(DefaultLaw{{"sd", "f"}, truth(), std::nullopt}, *sig);
        REQUIRE(laws.size() == 1);
        CHECK(laws[0].form == LawForm::Static);
    }

    SUBCASE("causes builds the triggered effect law") {
        auto laws = expandAbbreviation(
            CausesLaw{"flip", Formula::atom({"amount", "0"}), std::nullopt}, *sig);
        REQUIRE(laws.size() == 1);
        CHECK(laws[0].form == LawForm::FluentDynamic);
        CHECK(structurallyEqual(*laws[0].afterPart, Formula::atom({"flip", "t"})));

        auto conditional = expandAbbreviation(
            CausesLaw{"flip", Formula::atom({"amount", "0"}), Formula::atom({"amount", "1"})},
            *sig);
        CHECK(structurallyEqual(*conditional[0].afterPart,
                                Formula::conj(Formula::atom({"flip", "t"}),
                                              Formula::atom({"amount", "1"}))));
        CHECK_THROWS_AS(expandAbbreviation(CausesLaw{"loc", truth(), std::nullopt}, *sig),
                        ValidationError);
    }

    SUBCASE("constraint, always, nonexecutable") {
        Formula f = Formula::atom({"amount", "0"});
        auto c = expandAbbreviation(ConstraintLaw{f}, *sig);
        CHECK(c[0].form == LawForm::Static);
        CHECK(isFalsity(c[0].head));
        CHECK(structurallyEqual(c[0].ifPart, neg(f)));

        auto a = expandAbbreviation(AlwaysLaw{f}, *sig);
        CHECK(a[0].form == LawForm::FluentDynamic);
        CHECK(structurallyEqual(*a[0].afterPart, neg(f)));

        Formula g = Formula::atom({"flip", "t"});
        auto n = expandAbbreviation(NonexecutableLaw{g, f}, *sig);
        CHECK(isFalsity(n[0].head));
        CHECK(structurallyEqual(*n[0].afterPart, Formula::conj(g, f)));
    }

    SUBCASE("expansion output validates and is stable under repetition") {
        testgen::Rng rng(5);
        for (int iter = 0; iter < 50; ++iter) {
            Abbreviation ab = InertialLaw{"loc"};
            switch (testgen::pick(rng, 0, 3)) {
                case 0: ab = InertialLaw{"amount"}; break;
                case 1: ab = ExogenousLaw{"flip"}; break;
                case 2: ab = DefaultLaw{{"sd", "t"}, truth(), std::nullopt}; break;
                case 3: ab = ConstraintLaw{Formula::atom({"loc", "b1"})}; break;
            }
            auto first = expandAbbreviation(ab, *sig);
            auto second = expandAbbreviation(ab, *sig);
            REQUIRE(first.size() == second.size());
            for (std::size_t i = 0; i < first.size(); ++i) {
                CHECK_FALSE(validateLaw(first[i], *sig).has_value());
                CHECK(structurallyEqual(first[i].head, second[i].head));
            }
        }
    }
}

TEST_CASE("definite and simple classification") {
    SignaturePtr sig = mixedSignature();
    Formula p = Formula::atom({"p", "t"});
    Formula n = Formula::atom({"n", "t"});
    Formula a1 = Formula::atom({"a1", "t"});

    SUBCASE("disjunctive heads are not definite") {
        ActionDescription d(sig, {staticLaw(Formula::disj(p, n), truth())});
        Classification c = classify(d);
        CHECK_FALSE(c.definite);
        CHECK_FALSE(c.simple);
    }

    SUBCASE("choice heads and literal bodies are simple") {
        ActionDescription d(sig, {
            staticLaw(n, Formula::conj(p, neg(n))),
            fluentDynamicLaw(choice(p), truth(), Formula::conj(a1, neg(p))),
            staticLaw(Formula::falsity(), neg(neg(p))),
        });
        Classification c = classify(d);
        CHECK(c.definite);
        CHECK(c.simple);
    }

    SUBCASE("aggregate bodies count as simple conjuncts") {
        Formula card = expandCardinality(std::nullopt, {{"p", "t"}, {"n", "t"}}, 1);
        ActionDescription d(sig, {staticLaw(Formula::falsity(), neg(card))});
        CHECK(classify(d).simple);
    }

    SUBCASE("non-literal bodies are definite but not simple") {
        ActionDescription d(sig, {staticLaw(n, Formula::disj(p, n))});
        Classification c = classify(d);
        CHECK(c.definite);
        CHECK_FALSE(c.simple);
    }

    SUBCASE("simple implies definite on random descriptions") {
        testgen::Rng rng(17);
        for (int iter = 0; iter < 100; ++iter) {
            ActionDescription d = testgen::randomSimpleDescription(rng);
            Classification c = classify(d);
            CHECK(c.definite);
            CHECK(c.simple);
        }
    }
}
