#include "daha/clifford.hpp"

#include <stdexcept>

namespace daha {

int mono_mul_sign(CliffordMono m1, CliffordMono m2) {
    int swaps = 0;
    while (m2) {
        int b = __builtin_ctz(m2);
        m2 &= m2 - 1;
        // generators of m1 with larger index must move past generator b
        swaps += __builtin_popcount(static_cast<unsigned>(m1) >> (b + 1));
    }
    return (swaps & 1) ? -1 : 1;
}

std::pair<int, CliffordMono> weyl_act(const GroupElement& w, CliffordMono m) {
    int sign = 1;
    int images[16];
    int len = 0;
    CliffordMono out = 0;
    for (unsigned rest = m; rest; rest &= rest - 1) {
        int b = __builtin_ctz(rest);
        int base = b >= 8 ? 8 : 0;
        int k = w.act_index(b - base + 1);
        if (k < 0) { sign = -sign; k = -k; }
        images[len++] = base + k - 1;
        out |= CliffordMono(1u << (base + k - 1));
    }
    for (int p = 0; p < len; ++p)
        for (int q = p + 1; q < len; ++q)
            if (images[p] > images[q]) sign = -sign;
    return {sign, out};
}

std::string mono_str(CliffordMono m) {
    std::string s;
    for (unsigned rest = m; rest; rest &= rest - 1) {
        int b = __builtin_ctz(rest);
        if (!s.empty()) s += "*";
        s += (b >= 8 ? "e" : "c") + std::to_string(b % 8 + 1);
    }
    return s.empty() ? "1" : s;
}

CliffordElement CliffordElement::mono(CliffordMono m, const Scalar& s) {
    CliffordElement r;
    r.add(m, s);
    return r;
}

void CliffordElement::add(CliffordMono m, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, s);
        return;
    }
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
}

CliffordElement CliffordElement::operator-() const {
    CliffordElement r;
    for (const auto& [m, s] : terms_) r.terms_.emplace(m, -s);
    return r;
}

CliffordElement operator+(const CliffordElement& x, const CliffordElement& y) {
    CliffordElement r = x;
    for (const auto& [m, s] : y.terms_) r.add(m, s);
    return r;
}

CliffordElement operator-(const CliffordElement& x, const CliffordElement& y) { return x + (-y); }

CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
    CliffordElement r;
    for (const auto& [m1, s1] : x.terms_)
        for (const auto& [m2, s2] : y.terms_) {
            auto [sg, m] = mono_mul(m1, m2);
            r.add(m, (s1 * s2).negated_if(sg < 0));
        }
    return r;
}

CliffordElement operator*(const Scalar& s, const CliffordElement& x) {
    CliffordElement r;
    for (const auto& [m, c] : x.terms_) r.add(m, s * c);
    return r;
}

std::string CliffordElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*" + mono_str(m);
    }
    return s;
}

CliffordElement weyl_act(const GroupElement& w, const CliffordElement& x) {
    CliffordElement r;
    for (const auto& [m, c] : x.terms()) {
        auto [sg, m2] = weyl_act(w, m);
        r.add(m2, c.negated_if(sg < 0));
    }
    return r;
}

namespace {

CliffordElement simple_root_element(const WeylType& ty, int i, bool use_e) {
    if (i < 1 || i > ty.num_generators())
        throw std::out_of_range("beta index " + std::to_string(i) + " out of range for " + ty.str());
    auto gen = [use_e](int k) { return use_e ? CliffordElement::e(k) : CliffordElement::c(k); };
    const Scalar inv_r2(QExt(0, 1, 0, 0, 2));
    const int n = ty.n;
    if (i < n) return inv_r2 * (gen(i) - gen(i + 1));
    if (ty.family == Family::B) return gen(n);
    return inv_r2 * (gen(n - 1) + gen(n));
}

}  // namespace

CliffordElement beta(const WeylType& ty, int i) { return simple_root_element(ty, i, false); }
CliffordElement nu(const WeylType& ty, int i) { return simple_root_element(ty, i, true); }

}  // namespace daha
