#include "daha/smash.hpp"

#include <stdexcept>

namespace daha {

CliffGroupAlgebra::CliffGroupAlgebra(CliffGroupConfig cfg)
    : cfg_(std::move(cfg)), sw_(&SpinWeyl::get(cfg_.type)) {}

CliffGroupConfig CliffGroupAlgebra::smash_plain(const WeylType& ty, bool has_c, bool has_e) {
    return {ty, has_c, has_e, false, false, true, true, "C x| CW"};
}

CliffGroupConfig CliffGroupAlgebra::smash_spin_minus(const WeylType& ty) {
    return {ty, true, false, true, true, true, true, "C x|- CW-"};
}

CliffGroupConfig CliffGroupAlgebra::smash_spin_plus(const WeylType& ty) {
    return {ty, true, false, true, false, true, true, "C x|+ CW-"};
}

CliffGroupConfig CliffGroupAlgebra::tensor_plain(const WeylType& ty, bool has_c, bool has_e, bool group_odd) {
    return {ty, has_c, has_e, false, group_odd, false, false, group_odd ? "C (x) CW(odd)" : "C (x) CW"};
}

CliffGroupConfig CliffGroupAlgebra::tensor_spin(const WeylType& ty, bool has_c, bool has_e) {
    return {ty, has_c, has_e, true, true, false, false, "C (x) CW-"};
}

CliffGroupConfig CliffGroupAlgebra::mixed_spin(const WeylType& ty) {
    return {ty, true, true, true, true, true, false, "(C(c) x|- CW-) (x) C(e)"};
}

Mono CliffGroupAlgebra::unit_mono() const {
    Mono m;
    m.g = GroupElement::identity_code(cfg_.type.n);
    return m;
}

std::vector<Gen> CliffGroupAlgebra::generators() const {
    std::vector<Gen> out;
    const int n = cfg_.type.n;
    if (cfg_.has_c)
        for (int k = 1; k <= n; ++k) out.push_back({Sym::c, k});
    if (cfg_.has_e)
        for (int k = 1; k <= n; ++k) out.push_back({Sym::e, k});
    for (int k = 1; k <= cfg_.type.num_generators(); ++k) out.push_back({cfg_.spin ? Sym::t : Sym::s, k});
    return out;
}

Element CliffGroupAlgebra::gen(const Gen& g) const {
    const int n = cfg_.type.n;
    Mono m = unit_mono();
    switch (g.sym) {
        case Sym::c:
            if (!cfg_.has_c || g.i < 1 || g.i > n) break;
            m.cl = c_bit(g.i);
            return Element::mono(m);
        case Sym::e:
            if (!cfg_.has_e || g.i < 1 || g.i > n) break;
            m.cl = e_bit(g.i);
            return Element::mono(m);
        case Sym::s:
        case Sym::t:
            if ((g.sym == Sym::t) != cfg_.spin || g.i < 1 || g.i > cfg_.type.num_generators()) break;
            m.g = generator(cfg_.type, g.i).code();
            return Element::mono(m);
        default:
            break;
    }
    throw std::invalid_argument("generator " + gen_name(g) + " not in " + name());
}

int CliffGroupAlgebra::group_parity(std::uint32_t g) const {
    return cfg_.group_odd ? (sw_->length(g) & 1) : 0;
}

int CliffGroupAlgebra::gen_parity(const Gen& g) const {
    if (g.sym == Sym::c || g.sym == Sym::e) return 1;
    return cfg_.group_odd ? 1 : 0;
}

int CliffGroupAlgebra::parity(const Mono& m) const { return (daha::parity(m.cl) + group_parity(m.g)) & 1; }

Element CliffGroupAlgebra::mul_mono(const Mono& a, const Element& b) const {
    Element r;
    const GroupElement ga = GroupElement::from_code_unchecked(cfg_.type, a.g);
    const int pa = group_parity(a.g);
    for (const auto& [mb, s] : b.terms()) {
        int sign = (pa & daha::parity(mb.cl)) ? -1 : 1;
        const CliffordMono mask = CliffordMono((cfg_.act_c ? kCMask : 0) | (cfg_.act_e ? kEMask : 0));
        auto [sg, m2] = weyl_act(ga, CliffordMono(mb.cl & mask));
        sign *= sg;
        const CliffordMono moved = CliffordMono(m2 | (mb.cl & ~mask));
        auto [sg2, cl] = mono_mul(a.cl, moved);
        sign *= sg2;
        const GroupElement gb = GroupElement::from_code_unchecked(cfg_.type, mb.g);
        Mono out;
        out.cl = cl;
        out.g = compose(ga, gb).code();
        if (cfg_.spin) sign *= sw_->cocycle(a.g, mb.g);
        r.add(out, s.negated_if(sign < 0));
    }
    return r;
}

std::vector<Gen> CliffGroupAlgebra::factor(const Mono& m) const {
    std::vector<Gen> out;
    for (int k = 1; k <= cfg_.type.n; ++k)
        if (m.cl & c_bit(k)) out.push_back({Sym::c, k});
    for (int k = 1; k <= cfg_.type.n; ++k)
        if (m.cl & e_bit(k)) out.push_back({Sym::e, k});
    for (int a : sw_->lift(m.g)) out.push_back({cfg_.spin ? Sym::t : Sym::s, a});
    return out;
}

std::string CliffGroupAlgebra::mono_str(const Mono& m) const {
    return join_factors({m.cl ? daha::mono_str(m.cl) : "",
                         cfg_.spin ? spin_str(cfg_.type, m.g) : group_str(cfg_.type, m.g)});
}

nlohmann::json CliffGroupAlgebra::mono_json(const Mono& m) const {
    nlohmann::json j;
    const int n = cfg_.type.n;
    if (cfg_.has_c) j["c"] = bits_json(m.cl, 0, n);
    if (cfg_.has_e) j["e"] = bits_json(m.cl, 8, n);
    j["w"] = GroupElement::from_code_unchecked(cfg_.type, m.g).str();
    return j;
}

Element CliffGroupAlgebra::group_element(const GroupElement& w) const {
    if (cfg_.spin) throw std::invalid_argument(name() + " has no plain group elements");
    if (!(w.type() == cfg_.type)) throw std::invalid_argument("group element of the wrong type");
    Mono m = unit_mono();
    m.g = w.code();
    return Element::mono(m);
}

Element CliffGroupAlgebra::spin_element(const SpinElement& s) const {
    if (!cfg_.spin) throw std::invalid_argument(name() + " has no spin group elements");
    if (!(s.type() == cfg_.type)) throw std::invalid_argument("spin element of the wrong type");
    Element r;
    for (const auto& [w, c] : s.terms()) {
        Mono m = unit_mono();
        m.g = w;
        r.add(m, c);
    }
    return r;
}

}  // namespace daha
