#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "daha/scalar.hpp"
#include "daha/weyl.hpp"

namespace daha {

// Clifford monomial as a bitmask: c_k is bit k-1, e_k is bit 8+k-1.
// The canonical order is ascending bit index, i.e. all c's before all e's.
using CliffordMono = std::uint16_t;

inline constexpr CliffordMono c_bit(int k) { return CliffordMono(1u << (k - 1)); }
inline constexpr CliffordMono e_bit(int k) { return CliffordMono(1u << (8 + k - 1)); }
inline constexpr CliffordMono kCMask = 0x00FF;
inline constexpr CliffordMono kEMask = 0xFF00;

inline int parity(CliffordMono m) { return __builtin_popcount(m) & 1; }

// Sign of m1*m2 relative to the canonical monomial m1 ^ m2.
int mono_mul_sign(CliffordMono m1, CliffordMono m2);
inline std::pair<int, CliffordMono> mono_mul(CliffordMono m1, CliffordMono m2) {
    return {mono_mul_sign(m1, m2), CliffordMono(m1 ^ m2)};
}

// Image of a monomial under w, acting on c's and e's by act_index.
std::pair<int, CliffordMono> weyl_act(const GroupElement& w, CliffordMono m);

std::string mono_str(CliffordMono m);

class CliffordElement {
public:
    CliffordElement() = default;
    CliffordElement(const Scalar& s) { add(0, s); }
    static CliffordElement mono(CliffordMono m, const Scalar& s = Scalar(1));
    static CliffordElement c(int k) { return mono(c_bit(k)); }
    static CliffordElement e(int k) { return mono(e_bit(k)); }

    void add(CliffordMono m, const Scalar& s);
    const std::map<CliffordMono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CliffordElement operator-() const;
    friend CliffordElement operator+(const CliffordElement& x, const CliffordElement& y);
    friend CliffordElement operator-(const CliffordElement& x, const CliffordElement& y);
    friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y);
    friend CliffordElement operator*(const Scalar& s, const CliffordElement& x);
    friend bool operator==(const CliffordElement&, const CliffordElement&) = default;
    std::string str() const;

private:
    std::map<CliffordMono, Scalar> terms_;
};

CliffordElement weyl_act(const GroupElement& w, const CliffordElement& x);

// beta_i (in the c's) and its counterpart nu_i (in the e's); normalized to
// square to 1: (c_i - c_{i+1})/r2, and c_n (B) or (c_{n-1} + c_n)/r2 (D).
CliffordElement beta(const WeylType& ty, int i);
CliffordElement nu(const WeylType& ty, int i);

}  // namespace daha
