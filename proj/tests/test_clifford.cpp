#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "daha/clifford.hpp"
#include "daha/parse.hpp"
#include "daha/smash.hpp"
#include "gen.hpp"

using namespace daha;

namespace {

// Letter-by-letter reordering: bubble sort a word of generator bits,
// counting swaps of distinct letters and cancelling equal neighbours.
std::pair<int, CliffordMono> brute_mono_mul(CliffordMono m1, CliffordMono m2) {
    std::vector<int> w;
    for (int b = 0; b < 16; ++b)
        if (m1 >> b & 1) w.push_back(b);
    for (int b = 0; b < 16; ++b)
        if (m2 >> b & 1) w.push_back(b);
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] == w[k + 1]) {
                w.erase(w.begin() + k, w.begin() + k + 2);
                changed = true;
                break;
            }
            if (w[k] > w[k + 1]) {
                std::swap(w[k], w[k + 1]);
                sign = -sign;
                changed = true;
            }
        }
    }
    CliffordMono m = 0;
    for (int b : w) m |= CliffordMono(1u << b);
    return {sign, m};
}

const Scalar kInvR2 = Scalar(QExt(0, 1, 0, 0, 2));

}  // namespace

TEST_CASE("monomial products") {
    CHECK(mono_mul(c_bit(1), c_bit(1)) == std::make_pair(1, CliffordMono(0)));
    CHECK(mono_mul(c_bit(2), c_bit(1)) == std::make_pair(-1, CliffordMono(c_bit(1) | c_bit(2))));
    const CliffordMono ce = c_bit(1) | e_bit(1);
    CHECK(mono_mul(ce, ce) == std::make_pair(-1, CliffordMono(0)));
    CHECK(brute_mono_mul(ce, ce) == mono_mul(ce, ce));
}

TEST_CASE("beta and nu") {
    const WeylType a3(Family::A, 3), b3(Family::B, 3), d3(Family::D, 3);
    CHECK(beta(a3, 1) == kInvR2 * (CliffordElement::c(1) - CliffordElement::c(2)));
    CHECK(beta(b3, 3) == CliffordElement::c(3));
    CHECK(beta(d3, 3) == kInvR2 * (CliffordElement::c(2) + CliffordElement::c(3)));
    CHECK(nu(a3, 2) == kInvR2 * (CliffordElement::e(2) - CliffordElement::e(3)));
    for (const WeylType& ty : {a3, b3, d3})
        for (int i = 1; i <= ty.num_generators(); ++i) {
            CHECK(beta(ty, i) * beta(ty, i) == CliffordElement(Scalar(1)));
            CHECK(nu(ty, i) * nu(ty, i) == CliffordElement(Scalar(1)));
        }
    CHECK_THROWS(beta(a3, 3));
}

TEST_CASE("Weyl group action") {
    const WeylType a3(Family::A, 3), b2(Family::B, 2);
    CHECK(weyl_act(generator(a3, 1), CliffordElement::c(1)) == CliffordElement::c(2));
    CHECK(weyl_act(reflection(b2, ReflectionKind::Tau, 1), CliffordElement::c(1)) == -CliffordElement::c(1));
    // s1 sends c2 -> c1 and fixes c3 in the formula for beta_2
    CHECK(weyl_act(generator(a3, 1), beta(a3, 2)) == kInvR2 * (CliffordElement::c(1) - CliffordElement::c(3)));
}

TEST_CASE("smash product cross rules") {
    const WeylType a4(Family::A, 4);
    CliffGroupAlgebra plain(CliffGroupAlgebra::smash_plain(a4, true, false));
    CHECK(parse(plain, "s1*c1") == parse(plain, "c2*s1"));
    CliffGroupAlgebra minus(CliffGroupAlgebra::smash_spin_minus(a4));
    CHECK(parse(minus, "t1*c3") == parse(minus, "-c3*t1"));
    CHECK(parse(minus, "t1*c1") == parse(minus, "-c2*t1"));
    CliffGroupAlgebra plus(CliffGroupAlgebra::smash_spin_plus(a4));
    CHECK(parse(plus, "t1*beta3") == parse(plus, "beta3*t1"));
    CHECK(parse(plus, "t1*c1") == parse(plus, "c2*t1"));
}

TEST_CASE("property: monomial product is associative and matches reordering") {
    const int n = 3;
    std::vector<CliffordMono> monos;
    for (int mask = 0; mask < (1 << (2 * n)); ++mask) {
        CliffordMono m = 0;
        for (int b = 0; b < 2 * n; ++b)
            if (mask >> b & 1) m |= b < n ? c_bit(b + 1) : e_bit(b - n + 1);
        monos.push_back(m);
    }
    for (CliffordMono a : monos)
        for (CliffordMono b : monos) {
            REQUIRE(mono_mul(a, b) == brute_mono_mul(a, b));
            for (CliffordMono c : monos) {
                const auto [s1, ab] = mono_mul(a, b);
                const auto [s2, abc] = mono_mul(ab, c);
                const auto [s3, bc] = mono_mul(b, c);
                const auto [s4, abc2] = mono_mul(a, bc);
                REQUIRE(abc == abc2);
                REQUIRE(s1 * s2 == s3 * s4);
            }
        }
}

TEST_CASE("property: the group acts by automorphisms") {
    gen::Rng rng(31);
    for (Family f : {Family::A, Family::B, Family::D}) {
        const WeylType ty(f, 3);
        for (int k = 0; k < 200; ++k) {
            const GroupElement w = gen::group_element(rng, ty);
            const CliffordElement x = gen::clifford(rng, 3, true), y = gen::clifford(rng, 3, true);
            REQUIRE(weyl_act(w, x * y) == weyl_act(w, x) * weyl_act(w, y));
        }
    }
}

TEST_CASE("property: beta_j beta_i = -beta_i beta_j^{s_i}") {
    for (Family f : {Family::A, Family::B, Family::D})
        for (int n = 2; n <= 4; ++n) {
            const WeylType ty(f, n);
            for (int i = 1; i <= ty.num_generators(); ++i)
                for (int j = 1; j <= ty.num_generators(); ++j)
                    REQUIRE(beta(ty, j) * beta(ty, i) == -(beta(ty, i) * weyl_act(generator(ty, i), beta(ty, j))));
        }
}

TEST_CASE("property: (beta_i beta_j)^m = (-1)^(m+1)") {
    for (Family f : {Family::A, Family::B, Family::D})
        for (int n = 2; n <= 4; ++n) {
            const WeylType ty(f, n);
            for (int i = 1; i <= ty.num_generators(); ++i)
                for (int j = 1; j <= ty.num_generators(); ++j) {
                    if (i == j) continue;
                    const int m = ty.coxeter_m(i, j);
                    CliffordElement p(Scalar(1));
                    for (int k = 0; k < m; ++k) p = p * beta(ty, i) * beta(ty, j);
                    REQUIRE(p == CliffordElement(Scalar(m % 2 ? 1 : -1)));
                }
        }
}
