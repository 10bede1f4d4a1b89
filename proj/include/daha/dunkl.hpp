#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "daha/algebra.hpp"
#include "daha/iso.hpp"
#include "daha/pbw.hpp"

namespace daha {

using CarrierVec = std::map<std::uint16_t, Scalar>;

// Finite-dimensional module over K (the Clifford and group part of the
// algebra), with basis vectors labelled by 16-bit keys.
class Carrier {
public:
    virtual ~Carrier() = default;
    virtual std::string name() const = 0;
    virtual std::vector<std::uint16_t> basis() const = 0;
    // Action of a generator c_k, e_k, s_a or t_a on a basis vector.
    virtual CarrierVec act(const Gen& g, std::uint16_t b) const = 0;
    virtual std::string basis_str(std::uint16_t b) const = 0;
    virtual nlohmann::json basis_json(std::uint16_t b) const = 0;
};

// Clifford algebra acting on itself by left multiplication. With spin =
// false the group acts diagonally on c's and e's (the carrier C_2n of H);
// with spin = true t_a acts as left multiplication by beta_a (C_n of sH).
class CliffordCarrier : public Carrier {
public:
    CliffordCarrier(const WeylType& ty, bool has_e, bool spin);
    std::string name() const override;
    std::vector<std::uint16_t> basis() const override;
    CarrierVec act(const Gen& g, std::uint16_t b) const override;
    std::string basis_str(std::uint16_t b) const override;
    nlohmann::json basis_json(std::uint16_t b) const override;

private:
    WeylType ty_;
    bool has_e_, spin_;
};

// One-dimensional module on which every group element acts as 1.
class TrivialCarrier : public Carrier {
public:
    std::string name() const override { return "trivial"; }
    std::vector<std::uint16_t> basis() const override { return {0}; }
    CarrierVec act(const Gen& g, std::uint16_t b) const override;
    std::string basis_str(std::uint16_t) const override { return ""; }
    nlohmann::json basis_json(std::uint16_t) const override { return nullptr; }
};

// C_2n for H, C_n with Omega for sH, trivial for oH.
std::shared_ptr<const Carrier> default_carrier(const PBWAlgebra& alg);

struct ModuleKey {
    Exps a{};
    std::uint16_t m = 0;
    auto operator<=>(const ModuleKey&) const = default;
};

// Sum of coefficient * (polynomial monomial (x) carrier basis vector). The
// polynomial is in the x's (H, sH) or the skew xi's (oH).
class ModuleElement {
public:
    using Map = std::map<ModuleKey, Scalar>;

    static ModuleElement basis(const Exps& a, std::uint16_t m, const Scalar& s = Scalar(1));

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const ModuleKey& k, const Scalar& s);
    void add_scaled(const ModuleElement& x, const Scalar& s);

    ModuleElement operator-() const;
    friend ModuleElement operator+(const ModuleElement& x, const ModuleElement& y);
    friend ModuleElement operator-(const ModuleElement& x, const ModuleElement& y);
    friend ModuleElement operator*(const Scalar& s, const ModuleElement& x);
    ModuleElement& operator+=(const ModuleElement& y);
    ModuleElement& operator-=(const ModuleElement& y);
    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

private:
    Map terms_;
};

using PolyModuleElement = ModuleElement;

// Negative-control switches for the Dunkl formulas.
struct DunklFaults {
    // Negate the sum over the plain reflections s_ki.
    bool flip_reflection_sum = false;
    // oH: use the sign-free derivative in place of the super derivation.
    bool even_derivation = false;
};

// The induced module C[l_1..l_n] (x) M, on which the left block l acts by
// multiplication, K through M, and the right block by Dunkl operators.
class VermaModule {
public:
    explicit VermaModule(std::shared_ptr<const PBWAlgebra> alg, std::shared_ptr<const Carrier> carrier = nullptr,
                         DunklFaults faults = {});

    const PBWAlgebra& algebra() const { return *alg_; }
    const Carrier& carrier() const { return *carrier_; }
    bool skew() const { return alg_->family() == FamilyKind::oH; }
    // Polynomial variable of the module: x (H, sH) or xi (oH).
    Sym poly_sym() const;
    // Generator acting by Dunkl operators: y (H) or eta (sH, oH).
    Sym dunkl_sym() const;

    ModuleElement vacuum(std::uint16_t m = 0) const { return ModuleElement::basis(Exps{}, m); }
    // All basis vectors with polynomial degree <= degree.
    std::vector<ModuleKey> basis(int degree) const;

    // Explicit Dunkl operators; dunkl() dispatches on the family and caches
    // the image of each basis vector.
    ModuleElement dunkl(int i, const ModuleElement& v) const;
    ModuleElement dunkl_y(int i, const ModuleElement& v) const;
    ModuleElement dunkl_eta_sH(int i, const ModuleElement& v) const;
    ModuleElement dunkl_eta_oH(int i, const ModuleElement& v) const;
    // Independent route: r_i (l_j f (x) m) = eps l_j r_i (f (x) m) + [r_i, l_j] (f (x) m),
    // with r_i annihilating 1 (x) M and the bracket taken from the algebra.
    ModuleElement dunkl_recursive(int i, const ModuleElement& v) const;

    ModuleElement act_gen(const Gen& g, const ModuleElement& v) const;
    ModuleElement act_word(const std::vector<Gen>& w, const ModuleElement& v) const;
    ModuleElement act(const Element& a, const ModuleElement& v) const;
    ModuleElement act(const FreeExpr& e, const ModuleElement& v) const;
    // Left multiplication by a polynomial in the module variables.
    template <bool Skew>
    ModuleElement poly_times(const Poly<Skew>& p, const ModuleElement& v) const;
    // The vector a (x) 1 (x) ... : a applied to the vacuum.
    ModuleElement from_element(const Element& a) const { return act(a, vacuum()); }

    std::string str(const ModuleElement& v) const;
    nlohmann::json to_json(const ModuleElement& v) const;

private:
    ModuleElement act_k_gen(const Gen& g, const ModuleElement& v) const;
    ModuleElement recursive_term(int i, const ModuleKey& key) const;
    // Per carrier vector: q with d * q equal to the polynomial part.
    template <bool Skew>
    ModuleElement divide_left(const ModuleElement& v, const Poly<Skew>& d) const;

    std::shared_ptr<const PBWAlgebra> alg_;
    std::shared_ptr<const Carrier> carrier_;
    DunklFaults faults_;
    WeylType subst_type_;  // type B of the same rank, for signed substitutions
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, ModuleKey>, ModuleElement> memo_;
};

// For each defining relation, the first basis vector (degree <= degree) on
// which lhs and rhs act differently.
struct OperatorRelationResult {
    std::string label;
    bool pass = true;
    std::optional<ModuleKey> witness;
    ModuleElement residual;
};
std::vector<OperatorRelationResult> relation_faithfulness(const VermaModule& mod, int degree);
// The defining relations among K generators alone, on the carrier.
std::vector<OperatorRelationResult> carrier_compatibility(const VermaModule& mod);

// Vectors v of polynomial degree <= degree where D_i D_j v != +-D_j D_i v
// for some i < j: the Dunkl operators must commute for H and anticommute
// for sH and oH.
struct AnticommuteFailure {
    int i, j;
    ModuleKey key;
    ModuleElement residual;
};
std::vector<AnticommuteFailure> anticommute_failures(const VermaModule& mod, int degree);

// z_i = -xi_i eta_i + u sum_{k<i} s_ki in oH of type A.
Element z_element(const PBWAlgebra& alg, int i);
// L_i = sum_{k<i} s_ki in any algebra with plain group elements.
Element jucys_murphy(const Algebra& alg, int i);

struct CentralResult {
    bool central = true;
    std::optional<Gen> witness;
    Element commutator;
};
// [a, g] for every generator g; throws std::invalid_argument for odd a.
CentralResult is_central(const Algebra& alg, const Element& a);

// Elementary symmetric polynomial e_k in the squares of the generators
// sym_1 .. sym_n.
Element elementary_in_squares(const Algebra& alg, Sym sym, int k);

}  // namespace daha
