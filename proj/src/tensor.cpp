#include "daha/tensor.hpp"

#include <stdexcept>

namespace daha {

TensorAlgebra::TensorAlgebra(std::shared_ptr<const Algebra> inner, bool outer_c, bool outer_e)
    : inner_(std::move(inner)), outer_c_(outer_c), outer_e_(outer_e) {
    for (const Gen& g : inner_->generators())
        if ((outer_c_ && g.sym == Sym::c) || (outer_e_ && g.sym == Sym::e))
            throw std::invalid_argument("outer Clifford letters clash with " + inner_->name());
}

std::string TensorAlgebra::name() const {
    std::string c = outer_c_ && outer_e_ ? "C(c,e)" : outer_c_ ? "C(c)" : "C(e)";
    return c + " (x) " + inner_->name();
}

std::vector<Gen> TensorAlgebra::generators() const {
    std::vector<Gen> out;
    const int n = type().n;
    if (outer_c_)
        for (int k = 1; k <= n; ++k) out.push_back({Sym::outer_c, k});
    if (outer_e_)
        for (int k = 1; k <= n; ++k) out.push_back({Sym::outer_e, k});
    for (const Gen& g : inner_->generators()) out.push_back(g);
    return out;
}

Element TensorAlgebra::gen(const Gen& g) const {
    const int n = type().n;
    if ((g.sym == Sym::outer_c && outer_c_) || (g.sym == Sym::outer_e && outer_e_)) {
        if (g.i < 1 || g.i > n) throw std::invalid_argument("generator index out of range");
        Mono m = unit_mono();
        m.outer = g.sym == Sym::outer_c ? c_bit(g.i) : e_bit(g.i);
        return Element::mono(m);
    }
    if (g.sym == Sym::outer_c || g.sym == Sym::outer_e)
        throw std::invalid_argument("generator " + gen_name(g) + " not in " + name());
    return inner_->gen(g);
}

int TensorAlgebra::gen_parity(const Gen& g) const {
    if (g.sym == Sym::outer_c || g.sym == Sym::outer_e) return 1;
    return inner_->gen_parity(g);
}

int TensorAlgebra::parity(const Mono& m) const {
    Mono in = m;
    in.outer = 0;
    return (daha::parity(m.outer) + inner_->parity(in)) & 1;
}

Element TensorAlgebra::mul_mono(const Mono& a, const Element& b) const {
    Mono a_in = a;
    a_in.outer = 0;
    const int pa = inner_->parity(a_in);
    // group the terms of b by their outer factor
    std::map<CliffordMono, Element> by_outer;
    for (const auto& [m, s] : b.terms()) {
        Mono in = m;
        in.outer = 0;
        by_outer[m.outer].add(in, s);
    }
    Element r;
    for (const auto& [o2, inner_b] : by_outer) {
        auto [sg, o] = mono_mul(a.outer, o2);
        if (pa & daha::parity(o2)) sg = -sg;
        const Element prod = inner_->mul_mono(a_in, inner_b);
        for (const auto& [m, s] : prod.terms()) {
            Mono out = m;
            out.outer = o;
            r.add(out, s.negated_if(sg < 0));
        }
    }
    return r;
}

std::vector<Gen> TensorAlgebra::factor(const Mono& m) const {
    std::vector<Gen> out;
    const int n = type().n;
    for (int k = 1; k <= n; ++k)
        if (m.outer & c_bit(k)) out.push_back({Sym::outer_c, k});
    for (int k = 1; k <= n; ++k)
        if (m.outer & e_bit(k)) out.push_back({Sym::outer_e, k});
    Mono in = m;
    in.outer = 0;
    for (const Gen& g : inner_->factor(in)) out.push_back(g);
    return out;
}

std::string TensorAlgebra::mono_str(const Mono& m) const {
    Mono in = m;
    in.outer = 0;
    return join_factors({m.outer ? daha::mono_str(m.outer) : "", inner_->mono_str(in)});
}

nlohmann::json TensorAlgebra::mono_json(const Mono& m) const {
    Mono in = m;
    in.outer = 0;
    nlohmann::json j = inner_->mono_json(in);
    const int n = type().n;
    if (outer_c_) j["outer_c"] = bits_json(m.outer, 0, n);
    if (outer_e_) j["outer_e"] = bits_json(m.outer, 8, n);
    return j;
}

}  // namespace daha
