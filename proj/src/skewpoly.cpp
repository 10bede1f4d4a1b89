#include "daha/skewpoly.hpp"

#include <stdexcept>

namespace daha {

int skew_mul_sign(const Exps& a, const Exps& b) {
    int parity = 0, above = 0;
    for (int i = kMaxRank - 1; i >= 0; --i) {
        parity ^= (above & b[i]) & 1;
        above ^= a[i] & 1;
    }
    return parity ? -1 : 1;
}

std::pair<int, Exps> act_exps(const GroupElement& w, const Exps& a, bool skew, bool signed_) {
    Exps out{};
    int sign = 1;
    const int n = w.rank();
    int target[kMaxRank];
    for (int i = 0; i < n; ++i) {
        int k = w.act_index(i + 1);
        if (k < 0) {
            if (signed_ && (a[i] & 1)) sign = -sign;
            k = -k;
        }
        target[i] = k - 1;
        out[k - 1] = a[i];
    }
    if (skew) {
        // blocks b_i^{a_i} move past each other; odd blocks anticommute
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (target[i] > target[j] && (a[i] & 1) && (a[j] & 1)) sign = -sign;
    }
    return {sign, out};
}

template <bool Skew>
void Poly<Skew>::add(const Exps& a, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        terms_.emplace(a, s);
        return;
    }
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
}

template <bool Skew>
Poly<Skew> Poly<Skew>::operator-() const {
    Poly r(n_);
    for (const auto& [a, s] : terms_) r.terms_.emplace(a, -s);
    return r;
}

template <bool Skew>
std::string Poly<Skew>::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string mono;
        for (int k = 0; k < kMaxRank; ++k) {
            if (!it->first[k]) continue;
            if (!mono.empty()) mono += "*";
            mono += var + std::to_string(k + 1);
            if (it->first[k] > 1) mono += "^" + std::to_string(it->first[k]);
        }
        const Scalar& s = it->second;
        bool neg = s.is_negative_monomial();
        Scalar mag = neg ? -s : s;
        std::string body;
        if (mono.empty()) body = mag.str();
        else if (mag.is_one()) body = mono;
        else body = (mag.terms().size() > 1 ? "(" + mag.str() + ")" : mag.str()) + "*" + mono;
        if (first) out += neg ? "-" + body : body;
        else out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

template <bool Skew>
Poly<Skew> signed_act(const GroupElement& w, const Poly<Skew>& f) {
    Poly<Skew> r(f.rank());
    for (const auto& [a, s] : f.terms()) {
        auto [sg, b] = act_exps(w, a, Skew, true);
        r.add(b, s.negated_if(sg < 0));
    }
    return r;
}

template <bool Skew>
Poly<Skew> rho_act(const GroupElement& w, const Poly<Skew>& f) {
    Poly<Skew> r(f.rank());
    for (const auto& [a, s] : f.terms()) {
        auto [sg, b] = act_exps(w, a, Skew, false);
        r.add(b, s.negated_if(sg < 0));
    }
    return r;
}

SkewPoly super_derive(int i, const SkewPoly& f) {
    SkewPoly r(f.rank());
    for (const auto& [a, s] : f.terms()) {
        // d(xi_i^k) = xi_i^{k-1} for k odd, 0 for k even; passing the
        // earlier letters costs (-1)^{a_1 + ... + a_{i-1}}
        if ((a[i - 1] & 1) == 0) continue;
        int before = 0;
        for (int k = 0; k < i - 1; ++k) before += a[k];
        Exps b = a;
        --b[i - 1];
        r.add(b, s.negated_if(before & 1));
    }
    return r;
}

template <bool Skew>
Poly<Skew> exact_divide(const Poly<Skew>& f, const Poly<Skew>& d) {
    if (d.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    const auto& [dlead, dcoef] = *d.terms().rbegin();
    if (!dcoef.is_constant())
        throw std::domain_error("exact_divide: leading coefficient of divisor must be constant");
    const QExt dinv = qext_inverse(dcoef.constant());
    Poly<Skew> rem = f, quot(f.rank());
    while (!rem.is_zero()) {
        const auto [lead, coef] = *rem.terms().rbegin();
        Exps q{};
        for (int k = 0; k < kMaxRank; ++k) {
            if (lead[k] < dlead[k]) throw std::domain_error("exact_divide: divisor does not divide");
            q[k] = static_cast<std::uint8_t>(lead[k] - dlead[k]);
        }
        int sg = Skew ? skew_mul_sign(dlead, q) : 1;
        auto term = Poly<Skew>::monomial(f.rank(), q, coef.scaled(dinv).negated_if(sg < 0));
        quot = quot + term;
        rem = rem - d * term;
    }
    return quot;
}

template class Poly<true>;
template class Poly<false>;
template Poly<true> signed_act(const GroupElement&, const Poly<true>&);
template Poly<false> signed_act(const GroupElement&, const Poly<false>&);
template Poly<true> rho_act(const GroupElement&, const Poly<true>&);
template Poly<false> rho_act(const GroupElement&, const Poly<false>&);
template Poly<true> exact_divide(const Poly<true>&, const Poly<true>&);
template Poly<false> exact_divide(const Poly<false>&, const Poly<false>&);

}  // namespace daha
