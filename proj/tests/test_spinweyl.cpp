#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "daha/spinweyl.hpp"
#include "gen.hpp"

using namespace daha;

namespace {

SpinElement t(const WeylType& ty, int i) { return SpinElement::t(ty, i); }

SpinElement pow(const SpinElement& x, int m) {
    SpinElement r = SpinElement::one(x.type());
    for (int k = 0; k < m; ++k) r = r * x;
    return r;
}

// Lexicographically least reduced word of w, by searching all words of
// length l(w) in increasing lexicographic order.
std::vector<int> brute_lift(const GroupElement& w) {
    const WeylType& ty = w.type();
    const int len = w.length();
    std::vector<int> word(len, 1);
    for (;;) {
        if (word_to_element(ty, word) == w) return word;
        int k = len - 1;
        while (k >= 0 && word[k] == ty.num_generators()) word[k--] = 1;
        if (k < 0) return {-1};
        ++word[k];
    }
}

}  // namespace

TEST_CASE("canonical lifts") {
    const WeylType a3(Family::A, 3);
    CHECK(canonical_lift(GroupElement(a3)).empty());
    CHECK(canonical_lift(generator(a3, 1)) == std::vector<int>{1});
    const GroupElement longest(a3, {3, 2, 1});
    CHECK(canonical_lift(longest) == std::vector<int>{1, 2, 1});
    CHECK(brute_lift(longest) == std::vector<int>{1, 2, 1});
    for (Family f : {Family::A, Family::B, Family::D})
        for (const auto& w : enumerate(WeylType(f, 3))) REQUIRE(canonical_lift(w) == brute_lift(w));
}

TEST_CASE("embedding") {
    for (int i = 1; i <= 3; ++i) {
        const auto [c, w] = embed(WeylType(Family::A, 4), {i, i});
        CHECK(c == CliffordElement(Scalar(1)));
        CHECK(w.is_identity());
    }
    const auto [c13, w13] = embed(WeylType(Family::A, 4), {1, 3, 1, 3});
    CHECK(c13 == CliffordElement(Scalar(-1)));
    CHECK(w13.is_identity());
    const auto [cb, wb] = embed(WeylType(Family::B, 3), {2, 3, 2, 3, 2, 3, 2, 3});
    CHECK(cb == CliffordElement(Scalar(-1)));
    CHECK(wb.is_identity());
}

TEST_CASE("cocycle") {
    const WeylType a4(Family::A, 4);
    const SpinWeyl& sw = SpinWeyl::get(a4);
    for (const auto& w : enumerate(a4)) {
        REQUIRE(sw.cocycle(GroupElement(a4), w) == 1);
        REQUIRE(sw.cocycle(w, GroupElement(a4)) == 1);
    }
    const GroupElement s1 = generator(a4, 1), s3 = generator(a4, 3);
    CHECK(sw.cocycle(s1, s3) * sw.cocycle(s3, s1) == -1);
    CHECK(sw.cocycle(s1, s1) == 1);
}

TEST_CASE("spin multiplication") {
    const WeylType a3(Family::A, 3);
    CHECK(t(a3, 1) * t(a3, 1) == SpinElement::one(a3));
    const GroupElement w121 = word_to_element(a3, {1, 2, 1});
    CHECK(t(a3, 1) * t(a3, 2) * t(a3, 1) == SpinElement::basis(w121));
    // t2 t1 through the embedding: compare C_{21} with phi * C_{lift(s2 s1)}
    const GroupElement w21 = word_to_element(a3, {2, 1});
    const int phi = SpinWeyl::get(a3).cocycle(generator(a3, 2), generator(a3, 1));
    CHECK(t(a3, 2) * t(a3, 1) == Scalar(phi) * SpinElement::basis(w21));
    const auto [c21, g21] = embed(a3, {2, 1});
    const auto [cl, gl] = embed(a3, canonical_lift(w21));
    CHECK(g21 == gl);
    CHECK(c21 == Scalar(phi) * cl);
}

TEST_CASE("spin reflections") {
    const WeylType a3(Family::A, 3), b3(Family::B, 3), d3(Family::D, 3);
    for (int i = 1; i < 3; ++i) CHECK(spin_reflection(a3, SpinReflectionKind::Plain, i, i + 1) == t(a3, i));
    CHECK(spin_reflection(b3, SpinReflectionKind::BarSingle, 3) == t(b3, 3));
    CHECK(spin_reflection(a3, SpinReflectionKind::Plain, 2, 1) == Scalar(-1) * t(a3, 1));
    for (const WeylType& ty : {a3, b3, d3})
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                if (i == j) continue;
                CHECK(spin_reflection(ty, SpinReflectionKind::Plain, j, i) ==
                      Scalar(-1) * spin_reflection(ty, SpinReflectionKind::Plain, i, j));
                if (ty.family == Family::A) continue;
                CHECK(spin_reflection(ty, SpinReflectionKind::Barred, j, i) ==
                      spin_reflection(ty, SpinReflectionKind::Barred, i, j));
            }
    CHECK_THROWS(spin_reflection(a3, SpinReflectionKind::BarSingle, 1));
}

TEST_CASE("Omega") {
    const WeylType b3(Family::B, 3);
    for (int i = 1; i <= 3; ++i) CHECK(omega(t(b3, i)) == beta(b3, i));
    CHECK(omega(SpinElement::one(b3)) == CliffordElement(Scalar(1)));
    CHECK(omega(t(b3, 1) * t(b3, 2) * t(b3, 1)) == beta(b3, 1) * beta(b3, 2) * beta(b3, 1));
}

TEST_CASE("property: cocycle identity on random triples") {
    gen::Rng rng(41);
    for (Family f : {Family::A, Family::B, Family::D})
        for (int n = 2; n <= 4; ++n) {
            const WeylType ty(f, n);
            const auto all = enumerate(ty);
            const SpinWeyl& sw = SpinWeyl::get(ty);
            for (int k = 0; k < 500; ++k) {
                const auto& u = all[gen::uniform(rng, 0, int(all.size()) - 1)];
                const auto& v = all[gen::uniform(rng, 0, int(all.size()) - 1)];
                const auto& w = all[gen::uniform(rng, 0, int(all.size()) - 1)];
                REQUIRE(sw.cocycle(u, v) * sw.cocycle(compose(u, v), w) == sw.cocycle(v, w) * sw.cocycle(u, compose(v, w)));
            }
        }
}

TEST_CASE("property: spin multiplication is associative") {
    gen::Rng rng(42);
    for (Family f : {Family::A, Family::B, Family::D}) {
        const WeylType ty(f, 3);
        auto rand_elem = [&] {
            SpinElement x(ty);
            for (int k = gen::uniform(rng, 1, 3); k > 0; --k)
                x = x + gen::scalar(rng, 1) * SpinElement::basis(gen::group_element(rng, ty));
            return x;
        };
        for (int k = 0; k < 100; ++k) {
            const SpinElement a = rand_elem(), b = rand_elem(), c = rand_elem();
            REQUIRE((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("property: spin cover relations") {
    for (Family f : {Family::A, Family::B, Family::D})
        for (int n = 2; n <= 4; ++n) {
            const WeylType ty(f, n);
            for (int i = 1; i <= ty.num_generators(); ++i)
                for (int j = 1; j <= ty.num_generators(); ++j) {
                    const int m = ty.coxeter_m(i, j);
                    const SpinElement expected = Scalar(m % 2 ? 1 : -1) * SpinElement::one(ty);
                    REQUIRE(pow(t(ty, i) * t(ty, j), m) == (i == j ? SpinElement::one(ty) : expected));
                }
        }
}

TEST_CASE("property: spin reflections square to one") {
    for (Family f : {Family::A, Family::B, Family::D})
        for (int n = 2; n <= 4; ++n) {
            const WeylType ty(f, n);
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    const SpinElement r = spin_reflection(ty, SpinReflectionKind::Plain, i, j);
                    REQUIRE(r * r == SpinElement::one(ty));
                    if (f == Family::A) continue;
                    const SpinElement rb = spin_reflection(ty, SpinReflectionKind::Barred, i, j);
                    REQUIRE(rb * rb == SpinElement::one(ty));
                }
                if (f == Family::B) {
                    const SpinElement r = spin_reflection(ty, SpinReflectionKind::BarSingle, i);
                    REQUIRE(r * r == SpinElement::one(ty));
                }
            }
        }
}
