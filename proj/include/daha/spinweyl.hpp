#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "daha/clifford.hpp"
#include "daha/scalar.hpp"
#include "daha/weyl.hpp"

namespace daha {

// Basis {sigma_w} of the spin Weyl group algebra CW^-, where sigma_w is the
// product t_{a1}...t_{ak} over the canonical lift of w. Products are computed
// through the faithful embedding t_i -> sqrt(-1) nu_i s_i into C_h x| CW, which
// yields the 2-cocycle sigma_u sigma_v = phi(u, v) sigma_{uv}.
class SpinWeyl {
public:
    // Shared per-type tables. Construction builds the full cocycle table for
    // rank <= 4; larger ranks fill lazily under a lock.
    static const SpinWeyl& get(const WeylType& ty);

    const WeylType& type() const { return ty_; }

    // Image of sigma_w under the embedding: C_w * w with C_w in the e's.
    const CliffordElement& embedding_coefficient(const GroupElement& w) const;
    int cocycle(const GroupElement& u, const GroupElement& v) const;
    int cocycle(std::uint32_t u, std::uint32_t v) const;
    int length(std::uint32_t w) const;
    const std::vector<int>& lift(std::uint32_t w) const;
    // Omega(sigma_w) = beta_{a1} ... beta_{ak}.
    const CliffordElement& omega_of(std::uint32_t w) const;

private:
    explicit SpinWeyl(const WeylType& ty);
    int compute_cocycle(std::uint32_t u, std::uint32_t v) const;

    WeylType ty_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::uint32_t, CliffordElement> coeff_;
    mutable std::unordered_map<std::uint64_t, std::int8_t> cocycle_;
    mutable std::unordered_map<std::uint32_t, std::vector<int>> lift_;
    mutable std::unordered_map<std::uint32_t, int> length_;
    mutable std::unordered_map<std::uint32_t, CliffordElement> omega_;
};

// Sum of lambda_w sigma_w, keyed by the packed group element code.
class SpinElement {
public:
    explicit SpinElement(const WeylType& ty) : ty_(ty) {}
    static SpinElement one(const WeylType& ty);
    static SpinElement basis(const GroupElement& w, const Scalar& s = Scalar(1));
    static SpinElement t(const WeylType& ty, int i);
    // Signed product of generators t_{a1} ... t_{ak}.
    static SpinElement word(const WeylType& ty, const std::vector<int>& word, int sign = 1);

    const WeylType& type() const { return ty_; }
    const std::map<std::uint32_t, Scalar>& terms() const { return terms_; }
    void add(std::uint32_t w, const Scalar& s);
    bool is_zero() const { return terms_.empty(); }
    // For a single-term element +-sigma_w, returns (sign, w); throws otherwise.
    std::pair<int, GroupElement> as_signed_basis() const;

    friend SpinElement operator+(const SpinElement& x, const SpinElement& y);
    friend SpinElement operator-(const SpinElement& x, const SpinElement& y);
    friend SpinElement operator*(const SpinElement& x, const SpinElement& y);
    friend SpinElement operator*(const Scalar& s, const SpinElement& x);
    friend bool operator==(const SpinElement& x, const SpinElement& y) {
        return x.ty_ == y.ty_ && x.terms_ == y.terms_;
    }
    std::string str() const;

private:
    WeylType ty_;
    std::map<std::uint32_t, Scalar> terms_;
};

inline SpinElement spin_mul(const SpinElement& a, const SpinElement& b) { return a * b; }

// Embedding of a word in the t's: returns (C, w) with image C * w.
std::pair<CliffordElement, GroupElement> embed(const WeylType& ty, const std::vector<int>& word);

enum class SpinReflectionKind { Plain, Barred, BarSingle };
// [i,j] (i != j), ~[i,j] (types B, D), ~[i] (type B; j ignored).
SpinElement spin_reflection(const WeylType& ty, SpinReflectionKind kind, int i, int j = 0);

CliffordElement omega(const SpinElement& a);

}  // namespace daha
