#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>

#include <boost/container/small_vector.hpp>

namespace daha {

// Exact element of Q(i, sqrt2): (a + b*r2 + c*i + d*i*r2) / den.
// Kept reduced: den > 0 and gcd(a, b, c, d, den) == 1.
// Arithmetic runs on int64 with 128-bit intermediates; overflow throws.
class QExt {
public:
    QExt() = default;
    QExt(std::int64_t n) : a_(n) {}
    QExt(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
         std::int64_t den = 1);

    static QExt rational(std::int64_t num, std::int64_t den);
    static QExt sqrt2() { return {0, 1, 0, 0}; }
    static QExt imag() { return {0, 0, 1, 0}; }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_one() const { return a_ == 1 && den_ == 1 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

    QExt operator-() const { return {-a_, -b_, -c_, -d_, den_}; }
    friend QExt operator+(const QExt& x, const QExt& y);
    friend QExt operator-(const QExt& x, const QExt& y) { return x + (-y); }
    friend QExt operator*(const QExt& x, const QExt& y);
    QExt& operator+=(const QExt& y) { return *this = *this + y; }
    QExt& operator*=(const QExt& y) { return *this = *this * y; }

    friend bool operator==(const QExt&, const QExt&) = default;
    auto operator<=>(const QExt&) const = default;

    // Number of nonzero components among a, b, c, d.
    int support() const;
    // Text: "3", "-1/2*r2", "(1 + i*r2)"; no parentheses if one component.
    std::string str() const;
    std::size_t hash() const;

private:
    std::int64_t a_ = 0, b_ = 0, c_ = 0, d_ = 0, den_ = 1;
};

// Throws std::domain_error on q == 0.
QExt qext_inverse(const QExt& q);

// Degrees in the formal parameters t, u, v.
struct Degree {
    std::uint8_t t = 0, u = 0, v = 0;
    auto operator<=>(const Degree&) const = default;
};

// Element of Q(i, sqrt2)[t, u, v]: sparse, sorted, no zero coefficients.
class Scalar {
public:
    struct Term {
        Degree deg;
        QExt q;
    };
    using Storage = boost::container::small_vector<Term, 1>;

    Scalar() = default;
    Scalar(std::int64_t n) : Scalar(QExt(n)) {}
    Scalar(const QExt& q);
    Scalar(const QExt& q, Degree d);

    static Scalar t() { return Scalar(QExt(1), {1, 0, 0}); }
    static Scalar u() { return Scalar(QExt(1), {0, 1, 0}); }
    static Scalar v() { return Scalar(QExt(1), {0, 0, 1}); }
    static Scalar i() { return Scalar(QExt::imag()); }
    static Scalar sqrt2() { return Scalar(QExt::sqrt2()); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].deg == Degree{} && terms_[0].q.is_one(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].deg == Degree{}); }
    // Constant part as QExt; only meaningful if is_constant().
    QExt constant() const { return terms_.empty() ? QExt() : terms_[0].q; }
    const Storage& terms() const { return terms_; }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& y);
    Scalar& operator-=(const Scalar& y);
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar scaled(const QExt& q) const;
    Scalar negated_if(bool neg) const { return neg ? -*this : *this; }

    friend bool operator==(const Scalar& x, const Scalar& y);

    // Maximal degree in t, u, v respectively (0 for zero).
    Degree max_degree() const;
    // Substitute rationals for the parameters.
    QExt evaluate(const QExt& t, const QExt& u, const QExt& v) const;
    // Substitute arbitrary scalars for the parameters.
    Scalar substitute(const Scalar& t, const Scalar& u, const Scalar& v) const;

    // True when the scalar is c * monomial with c having a single
    // negative component, so a leading minus sign can be pulled out.
    bool is_negative_monomial() const;
    std::string str() const;
    std::size_t hash() const;

private:
    Storage terms_;
};

Scalar pow(const Scalar& x, unsigned k);

}  // namespace daha
