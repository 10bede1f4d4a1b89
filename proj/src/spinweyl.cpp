#include "daha/spinweyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace daha {

namespace {

std::uint64_t pair_key(std::uint32_t u, std::uint32_t v) { return (std::uint64_t(u) << 32) | v; }

int sign_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

const SpinWeyl& SpinWeyl::get(const WeylType& ty) {
    static std::mutex registry_mu;
    static std::map<std::pair<int, int>, std::unique_ptr<SpinWeyl>> registry;
    std::lock_guard<std::mutex> lock(registry_mu);
    auto key = std::make_pair(static_cast<int>(ty.family), ty.n);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<SpinWeyl>(new SpinWeyl(ty))).first;
    return *it->second;
}

SpinWeyl::SpinWeyl(const WeylType& ty) : ty_(ty) {
    if (ty.n > 4) return;
    auto elems = enumerate(ty);
    for (const auto& u : elems)
        for (const auto& v : elems) cocycle_[pair_key(u.code(), v.code())] = static_cast<std::int8_t>(compute_cocycle(u.code(), v.code()));
}

int SpinWeyl::length(std::uint32_t w) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = length_.find(w);
        if (it != length_.end()) return it->second;
    }
    int len = GroupElement::from_code_unchecked(ty_, w).length();
    std::lock_guard<std::mutex> lock(mu_);
    length_[w] = len;
    return len;
}

const std::vector<int>& SpinWeyl::lift(std::uint32_t w) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = lift_.find(w);
        if (it != lift_.end()) return it->second;
    }
    auto word = canonical_lift(GroupElement::from_code_unchecked(ty_, w));
    std::lock_guard<std::mutex> lock(mu_);
    return lift_.emplace(w, std::move(word)).first->second;
}

const CliffordElement& SpinWeyl::embedding_coefficient(const GroupElement& w) const {
    const std::uint32_t code = w.code();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = coeff_.find(code);
        if (it != coeff_.end()) return it->second;
    }
    CliffordElement c;
    if (w.is_identity()) {
        c = CliffordElement(Scalar(1));
    } else {
        // w = s_a w' with a the first letter of the canonical lift:
        // (i nu_a s_a)(C_{w'} w') = i nu_a (s_a . C_{w'}) s_a w'
        int a = lift(code).front();
        GroupElement sa = generator(ty_, a);
        GroupElement rest = compose(sa, w);
        const CliffordElement& prev = embedding_coefficient(rest);
        c = Scalar::i() * (nu(ty_, a) * weyl_act(sa, prev));
    }
    std::lock_guard<std::mutex> lock(mu_);
    return coeff_.emplace(code, std::move(c)).first->second;
}

int SpinWeyl::compute_cocycle(std::uint32_t uc, std::uint32_t vc) const {
    GroupElement u = GroupElement::from_code_unchecked(ty_, uc), v = GroupElement::from_code_unchecked(ty_, vc);
    const CliffordElement& cu = embedding_coefficient(u);
    CliffordElement cv = weyl_act(u, embedding_coefficient(v));
    const CliffordElement& cuv = embedding_coefficient(compose(u, v));
    // Compare one coefficient of C_u (u . C_v) against C_{uv}.
    auto lead = cuv.terms().begin();
    const CliffordMono m = lead->first;
    Scalar acc;
    for (const auto& [m1, s1] : cu.terms()) {
        auto it = cv.terms().find(CliffordMono(m1 ^ m));
        if (it == cv.terms().end()) continue;
        acc += (s1 * it->second).negated_if(mono_mul_sign(m1, it->first) < 0);
    }
    QExt ratio = acc.constant() * qext_inverse(lead->second.constant());
    if (ratio == QExt(1)) return 1;
    if (ratio == QExt(-1)) return -1;
    throw std::logic_error("spin embedding produced a non-sign cocycle value " + ratio.str());
}

int SpinWeyl::cocycle(std::uint32_t u, std::uint32_t v) const {
    const std::uint64_t key = pair_key(u, v);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cocycle_.find(key);
        if (it != cocycle_.end()) return it->second;
    }
    int phi = compute_cocycle(u, v);
    std::lock_guard<std::mutex> lock(mu_);
    cocycle_[key] = static_cast<std::int8_t>(phi);
    return phi;
}

int SpinWeyl::cocycle(const GroupElement& u, const GroupElement& v) const {
    return cocycle(u.code(), v.code());
}

const CliffordElement& SpinWeyl::omega_of(std::uint32_t w) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = omega_.find(w);
        if (it != omega_.end()) return it->second;
    }
    CliffordElement r(Scalar(1));
    for (int a : lift(w)) r = r * beta(ty_, a);
    std::lock_guard<std::mutex> lock(mu_);
    return omega_.emplace(w, std::move(r)).first->second;
}

SpinElement SpinElement::one(const WeylType& ty) { return basis(GroupElement(ty)); }

SpinElement SpinElement::basis(const GroupElement& w, const Scalar& s) {
    SpinElement r(w.type());
    r.add(w.code(), s);
    return r;
}

SpinElement SpinElement::t(const WeylType& ty, int i) { return basis(generator(ty, i)); }

SpinElement SpinElement::word(const WeylType& ty, const std::vector<int>& word, int sign) {
    SpinElement r = one(ty);
    for (int a : word) r = r * t(ty, a);
    return sign < 0 ? Scalar(-1) * r : r;
}

void SpinElement::add(std::uint32_t w, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, s);
        return;
    }
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
}

std::pair<int, GroupElement> SpinElement::as_signed_basis() const {
    if (terms_.size() != 1) throw std::logic_error("spin element is not a signed basis element");
    const auto& [w, s] = *terms_.begin();
    if (s.is_one()) return {1, GroupElement::from_code_unchecked(ty_, w)};
    if ((-s).is_one()) return {-1, GroupElement::from_code_unchecked(ty_, w)};
    throw std::logic_error("spin element is not a signed basis element");
}

SpinElement operator+(const SpinElement& x, const SpinElement& y) {
    SpinElement r = x;
    for (const auto& [w, s] : y.terms_) r.add(w, s);
    return r;
}

SpinElement operator-(const SpinElement& x, const SpinElement& y) {
    SpinElement r = x;
    for (const auto& [w, s] : y.terms_) r.add(w, -s);
    return r;
}

SpinElement operator*(const SpinElement& x, const SpinElement& y) {
    if (!(x.ty_ == y.ty_)) throw std::invalid_argument("spin_mul: Weyl type mismatch");
    const SpinWeyl& sw = SpinWeyl::get(x.ty_);
    SpinElement r(x.ty_);
    for (const auto& [u, a] : x.terms_)
        for (const auto& [v, b] : y.terms_) {
            GroupElement uv = compose(GroupElement::from_code_unchecked(x.ty_, u), GroupElement::from_code_unchecked(x.ty_, v));
            r.add(uv.code(), (a * b).negated_if(sw.cocycle(u, v) < 0));
        }
    return r;
}

SpinElement operator*(const Scalar& s, const SpinElement& x) {
    SpinElement r(x.ty_);
    for (const auto& [w, c] : x.terms_) r.add(w, s * c);
    return r;
}

std::string SpinElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    const SpinWeyl& sw = SpinWeyl::get(ty_);
    for (const auto& [w, s] : terms_) {
        if (!out.empty()) out += " + ";
        std::string word;
        for (int a : sw.lift(w)) word += (word.empty() ? "t" : "*t") + std::to_string(a);
        out += "(" + s.str() + ")*" + (word.empty() ? "1" : word);
    }
    return out;
}

std::pair<CliffordElement, GroupElement> embed(const WeylType& ty, const std::vector<int>& word) {
    CliffordElement c(Scalar(1));
    GroupElement w(ty);
    for (int a : word) {
        // (C w)(i nu_a s_a) = C (w . (i nu_a)) w s_a
        c = c * (Scalar::i() * weyl_act(w, nu(ty, a)));
        w = compose(w, generator(ty, a));
    }
    return {c, w};
}

namespace {

// t_{i up j}: t_i t_{i+1} ... t_j, empty if i > j
void append_up(std::vector<int>& w, int i, int j) {
    for (int k = i; k <= j; ++k) w.push_back(k);
}
// t_{i down j}: t_i t_{i-1} ... t_j, empty if i < j
void append_down(std::vector<int>& w, int i, int j) {
    for (int k = i; k >= j; --k) w.push_back(k);
}

}  // namespace

SpinElement spin_reflection(const WeylType& ty, SpinReflectionKind kind, int i, int j) {
    const int n = ty.n;
    auto check = [n](int k) {
        if (k < 1 || k > n) throw std::out_of_range("spin reflection index out of range");
    };
    std::vector<int> w;
    int sign = 1;
    switch (kind) {
        case SpinReflectionKind::Plain: {
            check(i); check(j);
            if (i == j) throw std::invalid_argument("[i,j] needs i != j");
            int lo = std::min(i, j), hi = std::max(i, j);
            append_down(w, hi - 1, lo + 1);
            w.push_back(lo);
            append_up(w, lo + 1, hi - 1);
            sign = sign_pow(hi - lo - 1) * (i < j ? 1 : -1);
            break;
        }
        case SpinReflectionKind::Barred: {
            if (ty.family == Family::A) throw std::invalid_argument("~[i,j] needs type B or D");
            check(i); check(j);
            if (i == j) throw std::invalid_argument("~[i,j] needs i != j");
            int lo = std::min(i, j), hi = std::max(i, j);
            append_up(w, hi, n - 1);
            append_up(w, lo, n - 2);
            if (ty.family == Family::D) {
                w.push_back(n);
                sign = sign_pow(hi - lo - 1);
            } else {
                w.push_back(n);
                w.push_back(n - 1);
                w.push_back(n);
                sign = sign_pow(hi - lo);
            }
            append_down(w, n - 2, lo);
            append_down(w, n - 1, hi);
            break;
        }
        case SpinReflectionKind::BarSingle: {
            if (ty.family != Family::B) throw std::invalid_argument("~[i] needs type B");
            check(i);
            append_up(w, i, n - 1);
            w.push_back(n);
            append_down(w, n - 1, i);
            sign = sign_pow(n - i);
            break;
        }
    }
    return SpinElement::word(ty, w, sign);
}

CliffordElement omega(const SpinElement& a) {
    const SpinWeyl& sw = SpinWeyl::get(a.type());
    CliffordElement r;
    for (const auto& [w, s] : a.terms()) r = r + s * sw.omega_of(w);
    return r;
}

}  // namespace daha
