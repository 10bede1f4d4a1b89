#include "daha/algebra.hpp"

#include <stdexcept>

namespace daha {

std::string gen_name(const Gen& g) {
    const char* base = "";
    switch (g.sym) {
        case Sym::x: base = "x"; break;
        case Sym::y: base = "y"; break;
        case Sym::c: base = "c"; break;
        case Sym::e: base = "e"; break;
        case Sym::s: base = "s"; break;
        case Sym::t: base = "t"; break;
        case Sym::xi: base = "xi"; break;
        case Sym::eta: base = "eta"; break;
        case Sym::outer_c: base = "c"; break;
        case Sym::outer_e: base = "e"; break;
    }
    return base + std::to_string(g.i);
}

Element Element::mono(const Mono& m, const Scalar& s) {
    Element r;
    r.add(m, s);
    return r;
}

void Element::add(const Mono& m, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, s);
    if (inserted) return;
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
}

void Element::add_scaled(const Element& x, const Scalar& s) {
    if (s.is_zero()) return;
    if (s.is_one()) {
        *this += x;
        return;
    }
    for (const auto& [m, c] : x.terms_) add(m, c * s);
}

Element Element::operator-() const {
    Element r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
}

Element operator+(const Element& x, const Element& y) {
    Element r = x;
    r += y;
    return r;
}

Element operator-(const Element& x, const Element& y) {
    Element r = x;
    r -= y;
    return r;
}

Element operator*(const Scalar& s, const Element& x) {
    Element r;
    r.add_scaled(x, s);
    return r;
}

Element& Element::operator+=(const Element& y) {
    for (const auto& [m, c] : y.terms_) add(m, c);
    return *this;
}

Element& Element::operator-=(const Element& y) {
    for (const auto& [m, c] : y.terms_) add(m, -c);
    return *this;
}

Element Element::substituted(const Scalar& t, const Scalar& u, const Scalar& v) const {
    Element r;
    for (const auto& [m, c] : terms_) r.add(m, c.substitute(t, u, v));
    return r;
}

Element Algebra::group_element(const GroupElement&) const {
    throw std::invalid_argument(name() + " has no plain group elements");
}

Element Algebra::spin_element(const SpinElement&) const {
    throw std::invalid_argument(name() + " has no spin group elements");
}

bool Algebra::has_generator(const Gen& g) const {
    for (const auto& h : generators())
        if (h == g) return true;
    return false;
}

Element Algebra::mul(const Element& a, const Element& b) const {
    Element r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [m, s] : a.terms()) r.add_scaled(mul_mono(m, b), s);
    return r;
}

Element Algebra::mul(std::initializer_list<Element> factors) const {
    Element r = one();
    for (const auto& f : factors) r = mul(r, f);
    return r;
}

Element Algebra::pow(const Element& a, unsigned k) const {
    Element r = one();
    for (unsigned j = 0; j < k; ++j) r = mul(r, a);
    return r;
}

Element Algebra::word(const std::vector<Gen>& w) const {
    Element r = one();
    // right to left keeps every intermediate product a short normal form
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = mul(gen(*it), r);
    return r;
}

Element Algebra::commutator(const Element& a, const Element& b) const { return mul(a, b) - mul(b, a); }

Element Algebra::anticommutator(const Element& a, const Element& b) const { return mul(a, b) + mul(b, a); }

Element Algebra::supercommutator(const Element& a, const Element& b) const {
    return (parity(a) & parity(b)) ? anticommutator(a, b) : commutator(a, b);
}

int Algebra::parity(const Element& a) const {
    int p = -1;
    for (const auto& [m, s] : a.terms()) {
        int q = parity(m);
        if (p >= 0 && q != p) throw std::invalid_argument("element is not homogeneous");
        p = q;
    }
    return p < 0 ? 0 : p;
}

Element Algebra::clifford(const CliffordElement& x, bool outer) const {
    Element r;
    for (const auto& [m, s] : x.terms()) {
        std::vector<Gen> w;
        for (int b = 0; b < 16; ++b) {
            if (!(m & (1u << b))) continue;
            int k = (b & 7) + 1;
            bool is_e = b >= 8;
            Sym sym = outer ? (is_e ? Sym::outer_e : Sym::outer_c) : (is_e ? Sym::e : Sym::c);
            w.push_back({sym, k});
        }
        r.add_scaled(word(w), s);
    }
    return r;
}

std::string Algebra::str(const Element& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, s] : a.terms()) {
        out += render_term(s, mono_str(m), first);
        first = false;
    }
    return out;
}

nlohmann::json Algebra::to_json(const Element& a) const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, s] : a.terms())
        terms.push_back({{"coeff", scalar_json(s)}, {"monomial", mono_json(m)}});
    return {{"family", family_label()}, {"type", std::string(1, family_char(type().family))},
            {"rank", type().n}, {"terms", terms}};
}

std::string render_term(const Scalar& s, const std::string& mono, bool first) {
    const bool neg = s.is_negative_monomial();
    const Scalar mag = neg ? -s : s;
    std::string body;
    if (mono.empty()) body = mag.str();
    else if (mag.is_one()) body = mono;
    else body = (mag.terms().size() > 1 ? "(" + mag.str() + ")" : mag.str()) + "*" + mono;
    if (first) return neg ? "- " + body : body;
    return (neg ? " - " : " + ") + body;
}

nlohmann::json scalar_json(const Scalar& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& tm : s.terms())
        out.push_back({{"deg", {tm.deg.t, tm.deg.u, tm.deg.v}}, {"qext", tm.q.str()}});
    return out;
}

std::string exps_str(const Exps& a, const std::string& var) {
    std::string out;
    for (int k = 0; k < kMaxRank; ++k) {
        if (!a[k]) continue;
        if (!out.empty()) out += "*";
        out += var + std::to_string(k + 1);
        if (a[k] > 1) out += "^" + std::to_string(a[k]);
    }
    return out;
}

nlohmann::json exps_json(const Exps& a, int n) {
    nlohmann::json out = nlohmann::json::array();
    for (int k = 0; k < n; ++k) out.push_back(a[k]);
    return out;
}

nlohmann::json bits_json(CliffordMono m, int offset, int n) {
    nlohmann::json out = nlohmann::json::array();
    for (int k = 0; k < n; ++k) out.push_back((m >> (offset + k)) & 1);
    return out;
}

std::string group_str(const WeylType& ty, std::uint32_t code) {
    const GroupElement w = GroupElement::from_code_unchecked(ty, code);
    if (w.is_identity()) return "";
    // recognize the named reflections first
    int moved[kMaxRank], k = 0;
    for (int j = 1; j <= ty.n; ++j)
        if (w.act_index(j) != j) moved[k++] = j;
    if (k == 1 && w.act_index(moved[0]) == -moved[0]) return "tau" + std::to_string(moved[0]);
    if (k == 2) {
        int i = moved[0], j = moved[1];
        if (w.act_index(i) == j && w.act_index(j) == i)
            return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        if (w.act_index(i) == -j && w.act_index(j) == -i)
            return "~(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    std::string out;
    for (int a : SpinWeyl::get(ty).lift(code)) out += (out.empty() ? "s" : "*s") + std::to_string(a);
    return out;
}

std::string spin_str(const WeylType& ty, std::uint32_t code) {
    std::string out;
    for (int a : SpinWeyl::get(ty).lift(code)) out += (out.empty() ? "t" : "*t") + std::to_string(a);
    return out;
}

std::string join_factors(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += "*";
        out += p;
    }
    return out;
}

}  // namespace daha
