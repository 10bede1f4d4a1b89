#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "daha/scalar.hpp"
#include "daha/weyl.hpp"

namespace daha {

// Exponent vector of a monomial b_1^{a_1} ... b_n^{a_n}.
using Exps = std::array<std::uint8_t, kMaxRank>;

inline int total_degree(const Exps& a) {
    int d = 0;
    for (auto x : a) d += x;
    return d;
}

// Sign of b^a * b^b against b^{a+b} for anticommuting b's:
// (-1)^{sum_{k > i} a_k b_i}.
int skew_mul_sign(const Exps& a, const Exps& b);

// Monomial image under w: b_i -> sign * b_{|w(i)|}. With skew = true the
// result is re-sorted and the reordering sign included; with signed_ = false
// the sign changes of w are ignored (the rho* action).
std::pair<int, Exps> act_exps(const GroupElement& w, const Exps& a, bool skew, bool signed_);

// Polynomials in n commuting (Skew = false) or pairwise anticommuting
// (Skew = true) variables with Scalar coefficients.
template <bool Skew>
class Poly {
public:
    explicit Poly(int n = 0) : n_(n) {}
    Poly(int n, const Scalar& s) : n_(n) { add(Exps{}, s); }
    static Poly monomial(int n, const Exps& a, const Scalar& s = Scalar(1)) {
        Poly p(n);
        p.add(a, s);
        return p;
    }
    static Poly var(int n, int i, unsigned power = 1) {
        Exps a{};
        a[i - 1] = static_cast<std::uint8_t>(power);
        return monomial(n, a);
    }

    int rank() const { return n_; }
    const std::map<Exps, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Exps& a, const Scalar& s);

    Poly operator-() const;
    friend Poly operator+(const Poly& x, const Poly& y) {
        Poly r = x;
        for (const auto& [a, s] : y.terms_) r.add(a, s);
        return r;
    }
    friend Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }
    friend Poly operator*(const Poly& x, const Poly& y) {
        Poly r(std::max(x.n_, y.n_));
        for (const auto& [a, s] : x.terms_)
            for (const auto& [b, t] : y.terms_) {
                Exps c;
                for (int k = 0; k < kMaxRank; ++k) c[k] = static_cast<std::uint8_t>(a[k] + b[k]);
                int sg = Skew ? skew_mul_sign(a, b) : 1;
                r.add(c, (s * t).negated_if(sg < 0));
            }
        return r;
    }
    friend Poly operator*(const Scalar& s, const Poly& x) {
        Poly r(x.n_);
        for (const auto& [a, c] : x.terms_) r.add(a, s * c);
        return r;
    }
    friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }

    // Text such as "xi1^2*xi3" with the given variable name.
    std::string str(const std::string& var) const;

private:
    int n_;
    std::map<Exps, Scalar> terms_;
};

using SkewPoly = Poly<true>;
using CommPoly = Poly<false>;

// f -> f^w with x_i -> sign x_{|w(i)|} (the operator written f^sigma).
template <bool Skew>
Poly<Skew> signed_act(const GroupElement& w, const Poly<Skew>& f);
// f -> f^{w*}: the permutation part only, as in the module action through rho.
template <bool Skew>
Poly<Skew> rho_act(const GroupElement& w, const Poly<Skew>& f);

// Super derivation with d(xi_j) = delta_ij and the signed Leibniz rule.
SkewPoly super_derive(int i, const SkewPoly& f);

// q with d * q == f; throws std::domain_error if d does not divide f.
template <bool Skew>
Poly<Skew> exact_divide(const Poly<Skew>& f, const Poly<Skew>& d);

}  // namespace daha
