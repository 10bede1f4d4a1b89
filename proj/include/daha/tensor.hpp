#pragma once

#include <memory>
#include <string>

#include "daha/algebra.hpp"

namespace daha {

// Super tensor product C (x) A of an outer Clifford algebra (c's and/or e's)
// with an inner algebra A:
//   (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'.
// Monomials keep the outer factor in Mono::outer and the inner one in the
// remaining fields. Outer generators render as plain c's and e's, so the
// inner algebra must not use the same letters.
class TensorAlgebra : public Algebra {
public:
    TensorAlgebra(std::shared_ptr<const Algebra> inner, bool outer_c, bool outer_e);

    const Algebra& inner() const { return *inner_; }
    std::shared_ptr<const Algebra> inner_ptr() const { return inner_; }
    bool outer_c() const { return outer_c_; }
    bool outer_e() const { return outer_e_; }

    std::string name() const override;
    const WeylType& type() const override { return inner_->type(); }
    Mono unit_mono() const override { return inner_->unit_mono(); }
    std::vector<Gen> generators() const override;
    Element gen(const Gen& g) const override;
    int gen_parity(const Gen& g) const override;
    int parity(const Mono& m) const override;
    Element mul_mono(const Mono& a, const Element& b) const override;
    std::vector<Gen> factor(const Mono& m) const override;
    std::string mono_str(const Mono& m) const override;
    nlohmann::json mono_json(const Mono& m) const override;
    Element group_element(const GroupElement& w) const override { return inner_->group_element(w); }
    Element spin_element(const SpinElement& s) const override { return inner_->spin_element(s); }

    // o (x) 1
    Element outer(const CliffordElement& x) const { return clifford(x, true); }

private:
    std::shared_ptr<const Algebra> inner_;
    bool outer_c_, outer_e_;
};

}  // namespace daha
