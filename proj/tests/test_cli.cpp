#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "daha/checks.hpp"
#include "daha/parse.hpp"
#include "daha/pbw.hpp"
#include "gen.hpp"

using namespace daha;

namespace {

PBWAlgebra make(FamilyKind f, Family ty, int n) { return PBWAlgebra(AlgebraSpec::formal(f, WeylType(ty, n))); }

}  // namespace

TEST_CASE("parsing") {
    PBWAlgebra hb = make(FamilyKind::H, Family::B, 1);
    CHECK(hb.str(parse(hb, "y1*x1 - x1*y1")) == "- v*tau1 + t*c1*e1");
    CHECK(parse(hb, "x1^0") == parse(hb, "1"));
    CHECK(parse(hb, "x1 x1") == parse(hb, "x1^2"));
    PBWAlgebra oa = make(FamilyKind::oH, Family::A, 2);
    CHECK(oa.str(parse(oa, "eta1 xi1 + xi1 eta1")) == "u*(1,2) + t");
    CHECK(parse(oa, "(1,2)") == parse(oa, "s1"));
    CHECK(parse_scalar("1/2 + i r2") * Scalar(2) == parse_scalar("1 + 2 i r2"));
    CHECK(parse_scalar("t u") == Scalar::t() * Scalar::u());
}

TEST_CASE("parse errors carry a position") {
    PBWAlgebra ha = make(FamilyKind::H, Family::A, 2);
    try {
        parse(ha, "x1 + @");
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos == 5);
    }
    CHECK_THROWS_AS(parse(ha, "x3"), ParseError);
    CHECK_THROWS_AS(parse(ha, "eta1"), ParseError);
    CHECK_THROWS_AS(parse(ha, "(x1"), ParseError);
}

TEST_CASE("rendering") {
    PBWAlgebra hb = make(FamilyKind::H, Family::B, 1);
    const nlohmann::json j = hb.to_json(parse(hb, "t c1 e1"));
    CHECK(j["family"] == "H");
    CHECK(j["type"] == "B");
    REQUIRE(j["terms"].size() == 1);
    const nlohmann::json& term = j["terms"][0];
    CHECK(term["coeff"] == nlohmann::json::parse(R"([{"deg":[1,0,0],"qext":"1"}])"));
    CHECK(term["monomial"]["c"] == nlohmann::json::array({1}));
    CHECK(term["monomial"]["e"] == nlohmann::json::array({1}));
    PBWAlgebra oa = make(FamilyKind::oH, Family::A, 2);
    CHECK(oa.str(parse(oa, "-u s1")) == "- u*(1,2)");
    CHECK(oa.str(Element()) == "0");
}

TEST_CASE("property: parsing inverts rendering") {
    gen::Rng rng(81);
    for (FamilyKind f : {FamilyKind::H, FamilyKind::sH, FamilyKind::oH})
        for (Family ty : {Family::A, Family::B, Family::D}) {
            PBWAlgebra alg = make(f, ty, 3);
            for (int k = 0; k < 200; ++k) {
                const Element a = gen::element(rng, alg);
                const std::string text = alg.str(a);
                INFO(text);
                REQUIRE(parse(alg, text) == a);
            }
        }
}

TEST_CASE("property: reports are reproducible for a seed") {
    for (const std::string& suite : {std::string("pbw"), std::string("cocycle")}) {
        CheckOptions o;
        o.seed = 7;
        o.rank = 2;
        const CheckReport a = run_check(suite, o), b = run_check(suite, o);
        CHECK(a.text() == b.text());
        CHECK(a.to_json().dump() == b.to_json().dump());
        CHECK(a.to_json()["seed"] == 7);
    }
}

TEST_CASE("check options") {
    CheckOptions o;
    o.rank = 5;
    CHECK_THROWS_AS(run_check("pbw", o), BudgetError);
    o.unsafe_rank = true;
    o.rank = 9;
    CHECK_THROWS_AS(run_check("pbw", o), std::invalid_argument);
    CHECK_THROWS_AS(run_check("nope", {}), std::invalid_argument);
    CHECK_THROWS_AS(ParamOverride::parse("t"), std::invalid_argument);
    CHECK_THROWS_AS(ParamOverride::parse("w=1"), std::invalid_argument);
    const ParamOverride p = ParamOverride::parse("t=0,u=1/2");
    CHECK(make_spec(FamilyKind::H, WeylType(Family::A, 2), p).t.is_zero());
    CHECK(suite_names().size() == 10);
}

TEST_CASE("negative control: an injected fault is reported with a counterexample") {
    CheckOptions o;
    o.rank = 2;
    o.inject_fault = true;
    const CheckReport r = run_check("pbw", o);
    CHECK_FALSE(r.pass());
    CHECK(r.failures() > 0);
    const nlohmann::json j = r.to_json();
    bool found = false;
    for (const auto& c : j["cases"])
        if (!c["pass"].get<bool>()) found = found || !c["counterexample"].is_null();
    CHECK(found);
    CHECK(r.text().find("FAIL") != std::string::npos);
}
