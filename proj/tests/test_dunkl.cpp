#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "daha/checks.hpp"
#include "daha/dunkl.hpp"
#include "daha/iso.hpp"
#include "daha/parse.hpp"
#include "gen.hpp"

using namespace daha;

namespace {

std::shared_ptr<const PBWAlgebra> make(FamilyKind f, Family ty, int n) {
    return std::make_shared<PBWAlgebra>(AlgebraSpec::formal(f, WeylType(ty, n)));
}

// The module vector a (x) 1 for an element a of the left block.
ModuleElement vec(const VermaModule& mod, const std::string& text) {
    return mod.from_element(parse(mod.algebra(), text));
}

}  // namespace

TEST_CASE("odd Dunkl operators") {
    VermaModule a2(make(FamilyKind::oH, Family::A, 2));
    CHECK(a2.dunkl(1, vec(a2, "xi1")) == vec(a2, "t + u"));
    CHECK(a2.dunkl(1, a2.vacuum()).is_zero());
    VermaModule b1(make(FamilyKind::oH, Family::B, 1));
    CHECK(b1.dunkl(1, vec(b1, "xi1")) == vec(b1, "t + v"));
    VermaModule b2(make(FamilyKind::oH, Family::B, 2));
    CHECK(b2.str(b2.dunkl(1, vec(b2, "xi1^2 xi2"))) == "- 2*u*xi1*xi2");
}

TEST_CASE("spin Dunkl operators") {
    VermaModule b1(make(FamilyKind::sH, Family::B, 1));
    // beta_1 = c_1 in type B_1, so both terms land on the same vector
    CHECK(b1.dunkl(1, vec(b1, "x1")) == vec(b1, "t c1 + v ~[1]"));
    CHECK(b1.str(b1.dunkl(1, vec(b1, "x1"))) == "(t + v)*1 (x) c1");
    VermaModule a2(make(FamilyKind::sH, Family::A, 2));
    const PBWAlgebra& alg = a2.algebra();
    // eta_1 x_1 (x) 1 = [eta_1, x_1] (x) 1 since eta_1 kills the vacuum
    CHECK(a2.dunkl(1, vec(a2, "x1")) == a2.act(alg.commutator(alg.gen({Sym::eta, 1}), alg.gen({Sym::x, 1})), a2.vacuum()));
}

TEST_CASE("even Dunkl operators") {
    VermaModule b1(make(FamilyKind::H, Family::B, 1));
    CHECK(b1.dunkl(1, vec(b1, "x1^2")).is_zero());
    VermaModule a2(make(FamilyKind::H, Family::A, 2));
    const PBWAlgebra& alg = a2.algebra();
    CHECK(a2.dunkl(1, vec(a2, "x1")) == a2.act(alg.commutator(alg.gen({Sym::y, 1}), alg.gen({Sym::x, 1})), a2.vacuum()));
    CHECK(a2.dunkl(2, a2.vacuum()).is_zero());
}

TEST_CASE("module action") {
    VermaModule a2(make(FamilyKind::H, Family::A, 2));
    const PBWAlgebra& alg = a2.algebra();
    CHECK(a2.act_gen({Sym::x, 1}, a2.vacuum()) == vec(a2, "x1"));
    CHECK(a2.act_gen({Sym::s, 1}, vec(a2, "x1")) == a2.act(parse(alg, "x2 s1"), a2.vacuum()));
    const Element y1 = alg.gen({Sym::y, 1}), x1 = alg.gen({Sym::x, 1});
    const ModuleElement v = vec(a2, "x1 x2 + x2^2");
    CHECK(a2.act(alg.mul(y1, x1), v) == a2.act(y1, a2.act(x1, v)));
}

TEST_CASE("odd Jucys-Murphy elements") {
    auto alg = make(FamilyKind::oH, Family::A, 2);
    CHECK(z_element(*alg, 1) == parse(*alg, "-xi1 eta1"));
    CHECK(z_element(*alg, 2) == parse(*alg, "-xi2 eta2 + u s1"));
    CHECK(alg->commutator(z_element(*alg, 1), z_element(*alg, 2)).is_zero());
    CHECK(jucys_murphy(*alg, 1).is_zero());
    CHECK(jucys_murphy(*alg, 2) == parse(*alg, "s1"));
    const Element s1 = alg->gen({Sym::s, 1});
    CHECK(alg->mul(s1, jucys_murphy(*alg, 1)) == alg->mul(jucys_murphy(*alg, 2), s1) - parse(*alg, "1"));
}

TEST_CASE("centrality") {
    auto hb = make(FamilyKind::H, Family::B, 2);
    CHECK(is_central(*hb, parse(*hb, "x1^2 + x2^2")).central);
    auto ha = make(FamilyKind::H, Family::A, 2);
    const CentralResult r = is_central(*ha, parse(*ha, "x1"));
    CHECK_FALSE(r.central);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == Gen{Sym::y, 1});
    auto oa = make(FamilyKind::oH, Family::A, 2);
    CHECK_THROWS_AS(is_central(*oa, parse(*oa, "xi1")), std::invalid_argument);
}

TEST_CASE("the printed oH(A2) quartic element") {
    auto alg = make(FamilyKind::oH, Family::A, 2);
    const std::string printed = "xi1^2 eta2^2 + xi2^2 eta1^2 - u s1 (xi1 - xi2)(eta1 - eta2)";
    const Element a = parse(*alg, printed);
    const Element xi1 = alg->gen({Sym::xi, 1});
    const Element expected = parse(*alg, "t u (xi1 - xi2) s1");
    // PBW rewriting
    CHECK(alg->commutator(a, xi1) == expected);
    // oracle: the same commutator through the faithful polynomial module
    VermaModule mod(alg);
    for (const ModuleKey& k : mod.basis(2)) {
        const ModuleElement v = ModuleElement::basis(k.a, k.m);
        const ModuleElement lhs = mod.act(a, mod.act(xi1, v)) - mod.act(xi1, mod.act(a, v));
        REQUIRE(lhs == mod.act(expected, v));
    }
    CHECK_FALSE(is_central(*alg, a).central);
    CHECK(is_central(*alg, parse(*alg, printed + " + t u s1")).central);
}

TEST_CASE("Clifford carrier compatibility") {
    for (FamilyKind f : {FamilyKind::H, FamilyKind::sH, FamilyKind::oH})
        for (Family ty : {Family::A, Family::B, Family::D}) {
            VermaModule mod(make(f, ty, 2));
            for (const auto& r : carrier_compatibility(mod)) CHECK_MESSAGE(r.pass, r.label);
        }
}

TEST_CASE("property: Dunkl operators match their recursion on random vectors") {
    gen::Rng rng(71);
    for (FamilyKind f : {FamilyKind::H, FamilyKind::sH, FamilyKind::oH})
        for (Family ty : {Family::A, Family::B, Family::D}) {
            VermaModule mod(make(f, ty, 2));
            const auto keys = mod.basis(3);
            for (int k = 0; k < 30; ++k) {
                ModuleElement v;
                for (int m = gen::uniform(rng, 1, 3); m > 0; --m) {
                    const ModuleKey& key = keys[gen::uniform(rng, 0, int(keys.size()) - 1)];
                    v += gen::nonzero_scalar(rng) * ModuleElement::basis(key.a, key.m);
                }
                for (int i = 1; i <= 2; ++i) REQUIRE(mod.dunkl(i, v) == mod.dunkl_recursive(i, v));
            }
        }
}

TEST_CASE("property: the module is faithful to the relations") {
    const CheckReport r = run_check("dunkl", {});
    CHECK(r.cases.size() > 0);
    for (const auto& c : r.cases) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
}

TEST_CASE("property: odd Dunkl operators anticommute") {
    for (Family ty : {Family::A, Family::B, Family::D}) {
        VermaModule mod(make(FamilyKind::oH, ty, 3));
        CHECK(anticommute_failures(mod, 4).empty());
    }
}

TEST_CASE("negative control: the even derivation breaks anticommutation") {
    DunklFaults df;
    df.even_derivation = true;
    VermaModule mod(make(FamilyKind::oH, Family::A, 3), nullptr, df);
    CHECK_FALSE(anticommute_failures(mod, 4).empty());
    DunklFaults flip;
    flip.flip_reflection_sum = true;
    VermaModule bad(make(FamilyKind::H, Family::A, 2), nullptr, flip);
    bool failed = false;
    for (const auto& r : relation_faithfulness(bad, 3)) failed = failed || !r.pass;
    CHECK(failed);
}
