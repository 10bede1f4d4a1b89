#pragma once

#include <string>

#include "daha/algebra.hpp"

namespace daha {

// Algebras spanned by c^eps e^eps' g with g in W (plain) or sigma_g in CW^-
// (spin). The cross rule is
//   g C = (-1)^{|g||C|} C' g,
// with |g| = l(g) mod 2 when the group part is odd and 0 otherwise, and C'
// obtained from C by letting g act on the c's (act_c) and on the e's
// (act_e). This covers the smash products C x| CW, C x|_- CW^-, C x|_+ CW^-,
// the super tensor products C (x) CW, C (x) CW^-, and the mixed algebra
// (C(c) x|_- CW^-) (x) C(e).
struct CliffGroupConfig {
    WeylType type;
    bool has_c = true;
    bool has_e = false;
    bool spin = false;
    bool group_odd = false;
    bool act_c = true;
    bool act_e = true;
    std::string label;
};

class CliffGroupAlgebra : public Algebra {
public:
    explicit CliffGroupAlgebra(CliffGroupConfig cfg);

    static CliffGroupConfig smash_plain(const WeylType& ty, bool has_c, bool has_e);
    static CliffGroupConfig smash_spin_minus(const WeylType& ty);
    static CliffGroupConfig smash_spin_plus(const WeylType& ty);
    static CliffGroupConfig tensor_plain(const WeylType& ty, bool has_c, bool has_e, bool group_odd);
    static CliffGroupConfig tensor_spin(const WeylType& ty, bool has_c, bool has_e);
    static CliffGroupConfig mixed_spin(const WeylType& ty);

    const CliffGroupConfig& config() const { return cfg_; }

    std::string name() const override { return cfg_.label; }
    const WeylType& type() const override { return cfg_.type; }
    Mono unit_mono() const override;
    std::vector<Gen> generators() const override;
    Element gen(const Gen& g) const override;
    int gen_parity(const Gen& g) const override;
    int parity(const Mono& m) const override;
    Element mul_mono(const Mono& a, const Element& b) const override;
    std::vector<Gen> factor(const Mono& m) const override;
    std::string mono_str(const Mono& m) const override;
    nlohmann::json mono_json(const Mono& m) const override;
    Element group_element(const GroupElement& w) const override;
    Element spin_element(const SpinElement& s) const override;

private:
    int group_parity(std::uint32_t g) const;

    CliffGroupConfig cfg_;
    const SpinWeyl* sw_;
};

}  // namespace daha
