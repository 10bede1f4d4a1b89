#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "daha/weyl.hpp"
#include "gen.hpp"

using namespace daha;

namespace {

GroupElement g(const WeylType& ty, std::vector<int> img) { return GroupElement(ty, img); }

GroupElement s(const WeylType& ty, int i) { return generator(ty, i); }

// Plain transposition s_ij in type A of the same rank, then reread in ty.
GroupElement transposition(const WeylType& ty, int i, int j) {
    if (i == j) return GroupElement(ty);
    std::vector<int> img(ty.n);
    std::iota(img.begin(), img.end(), 1);
    std::swap(img[i - 1], img[j - 1]);
    return GroupElement(ty, img);
}

GroupElement word(const WeylType& ty, std::initializer_list<GroupElement> ws) {
    GroupElement r(ty);
    for (const auto& w : ws) r = compose(r, w);
    return r;
}

// Coxeter matrix read off the Dynkin diagrams, written out separately from
// WeylType::coxeter_m.
int dynkin_m(const WeylType& ty, int i, int j) {
    if (i == j) return 1;
    if (i > j) std::swap(i, j);
    const int n = ty.n;
    switch (ty.family) {
        case Family::A: return j == i + 1 ? 3 : 2;
        case Family::B:
            if (i == n - 1 && j == n) return 4;
            return j == i + 1 ? 3 : 2;
        case Family::D:
            if (j == n) return i == n - 2 ? 3 : 2;
            return j == i + 1 ? 3 : 2;
    }
    return 2;
}

// Number of signed permutations of n letters with the family's sign rule,
// counted by brute force.
std::size_t brute_order(Family f, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::size_t count = 0;
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            const int neg = __builtin_popcount(mask);
            if (f == Family::A && neg) continue;
            if (f == Family::D && (neg & 1)) continue;
            ++count;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

}  // namespace

TEST_CASE("generators") {
    const WeylType b2(Family::B, 2), d2(Family::D, 2), a3(Family::A, 3);
    CHECK(s(b2, 2) == g(b2, {1, -2}));
    CHECK(s(b2, 2) == reflection(b2, ReflectionKind::Tau, 2));
    CHECK(s(d2, 2) == g(d2, {-2, -1}));
    CHECK(s(d2, 2) == reflection(d2, ReflectionKind::Barred, 1, 2));
    CHECK(s(a3, 1) == g(a3, {2, 1, 3}));
    CHECK_THROWS(generator(a3, 3));
    CHECK_THROWS(generator(b2, 3));
}

TEST_CASE("composition and inverse") {
    const WeylType a3(Family::A, 3), b2(Family::B, 2);
    CHECK(compose(s(a3, 1), s(a3, 1)).is_identity());
    const GroupElement tau1 = reflection(b2, ReflectionKind::Tau, 1);
    CHECK(compose(tau1, tau1).is_identity());
    CHECK(word(a3, {s(a3, 1), s(a3, 2), s(a3, 1)}) == word(a3, {s(a3, 2), s(a3, 1), s(a3, 2)}));
    CHECK_THROWS(compose(s(a3, 1), s(b2, 1)));
    gen::Rng rng(21);
    for (int k = 0; k < 100; ++k) {
        const GroupElement w = gen::group_element(rng, WeylType(Family::D, 4));
        REQUIRE(compose(w, inverse(w)).is_identity());
    }
}

TEST_CASE("reflections") {
    const WeylType d3(Family::D, 3), b3(Family::B, 3);
    for (const WeylType& ty : {WeylType(Family::A, 3), b3, d3})
        CHECK(reflection(ty, ReflectionKind::Plain, 1, 2) == g(ty, {2, 1, 3}));
    CHECK(reflection(d3, ReflectionKind::Barred, 2, 3) == s(d3, 3));
    const GroupElement s13 = transposition(b3, 1, 3);
    CHECK(reflection(b3, ReflectionKind::Tau, 1) == word(b3, {s13, s(b3, 3), s13}));
    CHECK_THROWS(reflection(WeylType(Family::A, 3), ReflectionKind::Tau, 1));
    CHECK_THROWS(reflection(WeylType(Family::A, 3), ReflectionKind::Barred, 1, 2));
}

TEST_CASE("index action") {
    const WeylType b2(Family::B, 2);
    CHECK(s(b2, 1).act_index(1) == 2);
    CHECK(reflection(b2, ReflectionKind::Tau, 1).act_index(1) == -1);
    // ~s_12 = s_1 tau_1 tau_2 on indices: 1 -> -2
    const GroupElement bar = reflection(b2, ReflectionKind::Barred, 1, 2);
    const GroupElement expanded = word(b2, {s(b2, 1), reflection(b2, ReflectionKind::Tau, 1), s(b2, 2)});
    CHECK(bar == expanded);
    CHECK(bar.act_index(1) == -2);
}

TEST_CASE("rho_star") {
    const WeylType b3(Family::B, 3);
    for (int i = 1; i <= 3; ++i) CHECK(rho_star(reflection(b3, ReflectionKind::Tau, i)).is_identity());
    CHECK(rho_star(reflection(b3, ReflectionKind::Barred, 1, 3)) ==
          rho_star(reflection(b3, ReflectionKind::Plain, 1, 3)));
    const GroupElement r = rho_star(s(b3, 1));
    CHECK(r.act_index(1) == 2);
    CHECK(r.act_index(2) == 1);
    CHECK(r.act_index(3) == 3);
}

TEST_CASE("enumerate") {
    CHECK(enumerate(WeylType(Family::A, 2)).size() == 2);
    CHECK(enumerate(WeylType(Family::B, 2)).size() == 8);
    CHECK(enumerate(WeylType(Family::D, 2)).size() == 4);
    for (Family f : {Family::A, Family::B, Family::D})
        for (int n = 2; n <= 4; ++n) {
            const auto all = enumerate(WeylType(f, n));
            CHECK(all.size() == brute_order(f, n));
            std::set<std::uint32_t> codes;
            for (const auto& w : all) codes.insert(w.code());
            CHECK(codes.size() == all.size());
        }
    CHECK_THROWS_AS(enumerate(WeylType(Family::B, 6), 1000), std::length_error);
}

TEST_CASE("property: involutions and Coxeter relations") {
    for (Family f : {Family::A, Family::B, Family::D})
        for (int n = 2; n <= 5; ++n) {
            const WeylType ty(f, n);
            for (int i = 1; i <= ty.num_generators(); ++i)
                for (int j = 1; j <= ty.num_generators(); ++j) {
                    const int m = dynkin_m(ty, i, j);
                    REQUIRE(ty.coxeter_m(i, j) == m);
                    GroupElement p(ty);
                    const GroupElement st = compose(s(ty, i), s(ty, j));
                    for (int k = 0; k < m; ++k) {
                        if (k > 0) REQUIRE_FALSE(p.is_identity());
                        p = compose(p, st);
                    }
                    REQUIRE(p.is_identity());
                }
        }
}

TEST_CASE("property: rho_star is a homomorphism") {
    for (Family f : {Family::B, Family::D})
        for (int n = 2; n <= 3; ++n) {
            const auto all = enumerate(WeylType(f, n));
            for (const auto& u : all)
                for (const auto& v : all) REQUIRE(rho_star(compose(u, v)) == compose(rho_star(u), rho_star(v)));
        }
}

TEST_CASE("property: word identities for barred reflections and sign changes") {
    for (int n = 2; n <= 4; ++n) {
        const WeylType d(Family::D, n), b(Family::B, n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                // ~s_ij = s_jn s_{i,n-1} s_n s_{i,n-1} s_jn
                const GroupElement sjn = transposition(d, j, n), sin1 = transposition(d, i, n - 1);
                REQUIRE(reflection(d, ReflectionKind::Barred, i, j) == word(d, {sjn, sin1, s(d, n), sin1, sjn}));
            }
        for (int i = 1; i <= n; ++i) {
            const GroupElement sin = transposition(b, i, n);
            REQUIRE(reflection(b, ReflectionKind::Tau, i) == word(b, {sin, s(b, n), sin}));
        }
    }
}

TEST_CASE("property: family membership validated at construction") {
    CHECK_THROWS(GroupElement(WeylType(Family::A, 2), {-1, 2}));
    CHECK_THROWS(GroupElement(WeylType(Family::D, 2), {-1, 2}));
    CHECK_NOTHROW(GroupElement(WeylType(Family::B, 2), {-1, 2}));
    CHECK_THROWS(GroupElement(WeylType(Family::B, 2), {1, 1}));
}
