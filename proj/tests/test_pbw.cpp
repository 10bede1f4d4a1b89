#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "daha/checks.hpp"
#include "daha/parse.hpp"
#include "daha/pbw.hpp"
#include "gen.hpp"

using namespace daha;

namespace {

PBWAlgebra make(FamilyKind f, Family ty, int n, BracketMode mode = BracketMode::ClosedForm) {
    AlgebraSpec s = AlgebraSpec::formal(f, WeylType(ty, n));
    s.mode = mode;
    return PBWAlgebra(s);
}

int xy_degree(const Element& a) {
    int d = 0;
    for (const auto& [m, s] : a.terms()) d = std::max(d, total_degree(m.L) + total_degree(m.R));
    return d;
}

}  // namespace

TEST_CASE("generators") {
    PBWAlgebra h = make(FamilyKind::H, Family::A, 2), sh = make(FamilyKind::sH, Family::A, 2),
               oh = make(FamilyKind::oH, Family::A, 2);
    CHECK(h.str(h.gen({Sym::x, 1})) == "x1");
    CHECK(sh.gen({Sym::t, 1}) == sh.spin_element(SpinElement::t(sh.type(), 1)));
    CHECK(oh.str(oh.gen({Sym::eta, 2})) == "eta2");
    CHECK_THROWS(h.gen({Sym::eta, 1}));
    CHECK_THROWS(oh.gen({Sym::c, 1}));
}

TEST_CASE("parameter validation") {
    AlgebraSpec s = AlgebraSpec::formal(FamilyKind::H, WeylType(Family::A, 2));
    CHECK_FALSE(s.v.has_value());
    CHECK(AlgebraSpec::formal(FamilyKind::H, WeylType(Family::B, 2)).v.has_value());
    s.v = Scalar::v();
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("products") {
    PBWAlgebra oh = make(FamilyKind::oH, Family::A, 2);
    CHECK(parse(oh, "eta1 xi1") == parse(oh, "-xi1 eta1 + t + u (1,2)"));
    PBWAlgebra h = make(FamilyKind::H, Family::A, 2);
    const Element rhs = parse(h, "x2 y1 + u (1 + c1 c2)(1 + e2 e1) s1");
    CHECK(parse(h, "y1 x2") == rhs);
    CHECK((rhs - parse(h, "x2 y1")).size() == 4);
    for (Family f : {Family::A, Family::B, Family::D}) {
        PBWAlgebra hb = make(FamilyKind::H, f, 2);
        CHECK(parse(hb, "x1 x2") == hb.mul(hb.gen({Sym::x, 2}), hb.gen({Sym::x, 1})));
    }
}

TEST_CASE("brackets") {
    PBWAlgebra h = make(FamilyKind::H, Family::A, 2);
    CHECK(h.commutator(h.gen({Sym::x, 1}), h.gen({Sym::x, 2})).is_zero());
    PBWAlgebra oh = make(FamilyKind::oH, Family::A, 2);
    CHECK(oh.anticommutator(oh.gen({Sym::eta, 1}), oh.gen({Sym::xi, 2})) == parse(oh, "u (1,2)"));
    PBWAlgebra hb = make(FamilyKind::H, Family::B, 1);
    CHECK(hb.commutator(hb.gen({Sym::y, 1}), hb.gen({Sym::x, 1})) == parse(hb, "t c1 e1 - v tau1"));
    PBWAlgebra sb = make(FamilyKind::sH, Family::B, 1);
    CHECK(sb.commutator(sb.gen({Sym::eta, 1}), sb.gen({Sym::x, 1})) == parse(sb, "t c1 + v ~[1]"));
}

TEST_CASE("closed-form brackets against iterated rewriting") {
    for (Family f : {Family::A, Family::B, Family::D}) {
        PBWAlgebra h = make(FamilyKind::H, f, 2), hs = make(FamilyKind::H, f, 2, BracketMode::Stepwise);
        CHECK(h.closed_form(1, 2, 0).is_zero());
        CHECK(h.closed_form(1, 2, 1) == h.relation(1, 2));
        for (int l = 0; l <= 4; ++l)
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j) {
                    const Element p = hs.pow(hs.gen({Sym::x, j}), l);
                    REQUIRE(h.closed_form(i, j, l) == hs.commutator(hs.gen({Sym::y, i}), p));
                }
    }
    PBWAlgebra a2 = make(FamilyKind::H, Family::A, 2, BracketMode::Stepwise);
    const Element x1 = a2.gen({Sym::x, 1}), y1 = a2.gen({Sym::y, 1});
    // two rewriting steps: [y, x x] = [y, x] x + x [y, x]
    const Element two_step = a2.mul(a2.commutator(y1, x1), x1) + a2.mul(x1, a2.commutator(y1, x1));
    CHECK(make(FamilyKind::H, Family::A, 2).closed_form(1, 1, 2) == two_step);
}

TEST_CASE("odd closed-form brackets") {
    PBWAlgebra ob = make(FamilyKind::oH, Family::B, 2), obs = make(FamilyKind::oH, Family::B, 2, BracketMode::Stepwise);
    CHECK(ob.closed_form(1, 2, 1) == ob.relation(1, 2));
    const Element eta1 = obs.gen({Sym::eta, 1}), xi1 = obs.gen({Sym::xi, 1});
    auto oracle = [&](int l) {
        const Element p = obs.pow(xi1, l);
        return obs.mul(eta1, p) + Scalar(l % 2 ? 1 : -1) * obs.mul(p, eta1);
    };
    const Element tau1 = ob.group_element(reflection(ob.type(), ReflectionKind::Tau, 1));
    auto has_v_tau = [&](const Element& e, const Exps& xi_power) {
        for (const auto& [m, s] : e.terms())
            if (m.L == xi_power && m.g == tau1.terms().begin()->first.g && m.R == Exps{})
                for (const auto& term : s.terms())
                    if (term.deg.v == 1) return true;
        return false;
    };
    CHECK(ob.closed_form(1, 1, 2) == oracle(2));
    CHECK_FALSE(has_v_tau(ob.closed_form(1, 1, 2), {1, 0}));
    CHECK(ob.closed_form(1, 1, 3) == oracle(3));
    CHECK(has_v_tau(ob.closed_form(1, 1, 3), {2, 0}));
    PBWAlgebra oa = make(FamilyKind::oH, Family::A, 2), oas = make(FamilyKind::oH, Family::A, 2, BracketMode::Stepwise);
    const Element p = oas.pow(oas.gen({Sym::xi, 2}), 3);
    CHECK(oa.closed_form(1, 2, 3) == oas.mul(oas.gen({Sym::eta, 1}), p) + oas.mul(p, oas.gen({Sym::eta, 1})));
    CHECK_THROWS_AS(make(FamilyKind::sH, Family::A, 2).closed_form(1, 1, 2), std::logic_error);
}

TEST_CASE("the automorphism varpi") {
    PBWAlgebra h = make(FamilyKind::H, Family::B, 2);
    const Element x1 = h.gen({Sym::x, 1}), x2 = h.gen({Sym::x, 2}), y1 = h.gen({Sym::y, 1});
    CHECK(h.varpi(x1) == y1);
    CHECK(h.varpi(h.varpi(x1)) == -x1);
    CHECK(h.varpi(h.commutator(y1, x2)) == h.commutator(h.varpi(y1), h.varpi(x2)));
    for (const Gen& g : h.generators()) CHECK(h.varpi(h.varpi(h.varpi(h.varpi(h.gen(g))))) == h.gen(g));
    CHECK_THROWS(make(FamilyKind::oH, Family::A, 2).varpi(x1));
}

TEST_CASE("property: associativity, parity and degree filtration") {
    gen::Rng rng(61);
    for (FamilyKind f : {FamilyKind::H, FamilyKind::sH, FamilyKind::oH})
        for (Family ty : {Family::A, Family::B, Family::D})
            for (int n = 2; n <= 3; ++n) {
                PBWAlgebra alg = make(f, ty, n);
                for (int k = 0; k < 60; ++k) {
                    const auto wa = gen::word(rng, alg, 4), wb = gen::word(rng, alg, 4), wc = gen::word(rng, alg, 4);
                    const Element a = alg.word(wa), b = alg.word(wb), c = alg.word(wc);
                    const Element ab = alg.mul(a, b);
                    REQUIRE(alg.mul(ab, c) == alg.mul(a, alg.mul(b, c)));
                    const Algebra& base = alg;
                    if (!ab.is_zero()) REQUIRE(base.parity(ab) == ((base.parity(a) + base.parity(b)) & 1));
                    REQUIRE(xy_degree(ab) <= xy_degree(a) + xy_degree(b));
                }
            }
}

TEST_CASE("property: Jacobi identity") {
    CheckOptions o;
    o.family = FamilyKind::H;
    const CheckReport r = run_check("jacobi", o);
    CHECK(r.cases.size() == 6);
    CHECK(r.pass());
}

TEST_CASE("property: conjugation invariance of the bracket relations") {
    const CheckReport r = run_check("conj", {});
    CHECK(r.cases.size() > 0);
    CHECK(r.pass());
}

TEST_CASE("negative control: a flipped bracket breaks associativity") {
    CheckOptions o;
    o.inject_fault = true;
    o.rank = 2;
    const CheckReport r = run_check("pbw", o);
    for (const auto& c : r.cases) {
        CHECK_FALSE(c.pass);
        CHECK_FALSE(c.counterexample.is_null());
    }
}
