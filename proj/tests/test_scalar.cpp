#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>

#include "daha/scalar.hpp"
#include "gen.hpp"

using namespace daha;

namespace {

// Independent numeric evaluation of a + b r2 + c i + d i r2 over den.
std::complex<double> numeric(const QExt& q) {
    const double r2 = std::sqrt(2.0);
    return std::complex<double>(double(q.a()) + double(q.b()) * r2, double(q.c()) + double(q.d()) * r2) /
           double(q.den());
}

const QExt kR2 = QExt::sqrt2();
const QExt kI = QExt::imag();
const QExt kIR2{0, 0, 0, 1};

}  // namespace

TEST_CASE("addition") {
    CHECK(Scalar(0) + Scalar::t() == Scalar::t());
    CHECK(Scalar(kR2) + Scalar(kR2) == Scalar(QExt(0, 2, 0, 0)));
    CHECK(Scalar(QExt(1) + kIR2) + Scalar(QExt(1) - kIR2) == Scalar(2));
}

TEST_CASE("multiplication") {
    CHECK(Scalar(kR2) * Scalar(kR2) == Scalar(2));
    CHECK(Scalar(kIR2) * Scalar(kIR2) == Scalar(-2));
    const QExt p = (QExt(1) + kIR2) * (QExt(1) - kIR2);
    CHECK(p == QExt(3));
    const auto z = numeric(QExt(1) + kIR2) * numeric(QExt(1) - kIR2);
    CHECK(z.real() == doctest::Approx(3.0));
    CHECK(z.imag() == doctest::Approx(0.0));
}

TEST_CASE("inverse") {
    CHECK(qext_inverse(QExt(2)) == QExt::rational(1, 2));
    CHECK(qext_inverse(kR2) == QExt(0, 1, 0, 0, 2));
    CHECK(qext_inverse(kI) == -kI);
    CHECK_THROWS_AS(qext_inverse(QExt(0)), std::domain_error);
}

TEST_CASE("rendering uses i, r2 and p/q") {
    CHECK(QExt::rational(-1, 2).str() == "-1/2");
    CHECK(kI.str() == "i");
    CHECK(kR2.str() == "r2");
    CHECK((Scalar::t() * Scalar::u()).str() == "t*u");
}

TEST_CASE("property: ring axioms on random triples") {
    gen::Rng rng(11);
    for (int k = 0; k < 1000; ++k) {
        const Scalar a = gen::scalar(rng), b = gen::scalar(rng), c = gen::scalar(rng);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * b == b * a);
        REQUIRE(a + b == b + a);
        REQUIRE(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("property: qext_inverse is a two-sided inverse") {
    gen::Rng rng(12);
    for (int k = 0; k < 100; ++k) {
        const QExt q = gen::nonzero_qext(rng);
        const QExt r = qext_inverse(q);
        REQUIRE(q * r == QExt(1));
        REQUIRE(r * q == QExt(1));
    }
}

TEST_CASE("property: no zero divisors, degrees add") {
    gen::Rng rng(13);
    for (int k = 0; k < 300; ++k) {
        const Scalar a = gen::nonzero_scalar(rng), b = gen::nonzero_scalar(rng);
        const Scalar p = a * b;
        REQUIRE_FALSE(p.is_zero());
        const Degree da = a.max_degree(), db = b.max_degree(), dp = p.max_degree();
        REQUIRE(dp.t == da.t + db.t);
        REQUIRE(dp.u == da.u + db.u);
        REQUIRE(dp.v == da.v + db.v);
    }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
    gen::Rng rng(14);
    const QExt t = QExt::rational(1, 2), u = QExt(3), v = kR2;
    for (int k = 0; k < 200; ++k) {
        const Scalar a = gen::scalar(rng), b = gen::scalar(rng);
        REQUIRE((a * b).evaluate(t, u, v) == a.evaluate(t, u, v) * b.evaluate(t, u, v));
        REQUIRE((a + b).evaluate(t, u, v) == a.evaluate(t, u, v) + b.evaluate(t, u, v));
    }
}
