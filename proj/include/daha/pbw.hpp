#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "daha/algebra.hpp"

namespace daha {

// H: x^a c^e w e^e' y^g     sH: eta^a c^e sigma_w x^g     oH: xi^a w eta^g
enum class FamilyKind : std::uint8_t { H, sH, oH };

std::string family_name(FamilyKind f);
// Accepts "H", "sH", "oH" (case-sensitive on the prefix letter only).
FamilyKind family_kind_from_name(const std::string& s);

// How r_i is moved past a power l_j^k of the left block: one letter at a
// time through the defining relation, or in one step through the closed
// formula for the bracket with l_j^k (H and oH; sH always steps).
enum class BracketMode : std::uint8_t { Stepwise, ClosedForm };

// Negative-control switches; all off in a faithful algebra.
struct Faults {
    // Negate the defining bracket for the single pair (r_1, l_2).
    bool flip_bracket = false;
    // Negate the closed-form bracket at exponent 3.
    bool corrupt_closed_form = false;
    friend bool operator==(const Faults&, const Faults&) = default;
};

struct AlgebraSpec {
    FamilyKind family = FamilyKind::H;
    WeylType type;
    Scalar t = Scalar::t();
    Scalar u = Scalar::u();
    // Present exactly for type B.
    std::optional<Scalar> v;
    BracketMode mode = BracketMode::ClosedForm;
    Faults faults;

    // Formal parameters t, u (and v for type B).
    static AlgebraSpec formal(FamilyKind f, const WeylType& ty);
    // Throws std::invalid_argument unless v is present exactly for type B.
    void validate() const;
    std::string str() const;
};

class PBWAlgebra : public Algebra {
public:
    explicit PBWAlgebra(AlgebraSpec spec);

    const AlgebraSpec& spec() const { return spec_; }
    FamilyKind family() const { return spec_.family; }

    std::string name() const override;
    std::string family_label() const override { return family_name(spec_.family); }
    const WeylType& type() const override { return spec_.type; }
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

    // Generator names per family: left block, right block, group generator.
    Sym left_sym() const;
    Sym right_sym() const;
    Sym group_sym() const;

    // Element of the left polynomial block.
    Element left_poly(const Exps& a, const Scalar& s = Scalar(1)) const;
    template <bool Skew>
    Element left_poly(const Poly<Skew>& p) const {
        Element r;
        for (const auto& [a, s] : p.terms()) r += left_poly(a, s);
        return r;
    }

    // Right side of the defining bracket relation, as printed:
    //   H  [y_i, x_j]    sH  [eta_i, x_j]    oH  [eta_i, xi_j]_+
    const Element& relation(int i, int j) const;

    // Closed formula for the bracket of r_i with l_j^l:
    //   H  [y_i, x_j^l]    oH  eta_i xi_j^l - (-1)^l xi_j^l eta_i
    // Throws std::logic_error for family sH.
    Element closed_form(int i, int j, int l) const;

    // The automorphism x -> y, y -> -x, c -> e, e -> -c of H (identity on W).
    Element varpi(const Element& a) const;

private:
    struct KTerm {
        Scalar c;
        Exps L;
        CliffordMono cl;
        std::uint32_t g;
    };
    using KList = std::vector<KTerm>;

    void build_relations();
    KList to_klist(const Element& e) const;

    // Family primitives on the K = (cl, g) part and the two blocks.
    std::pair<int, Mono> k_mul(CliffordMono cl1, std::uint32_t g1, CliffordMono cl2, std::uint32_t g2) const;
    std::pair<int, Exps> k_act_left(CliffordMono cl, std::uint32_t g, const Exps& a) const;
    std::pair<int, int> pass_k(int i, CliffordMono cl, std::uint32_t g) const;
    std::pair<int, Exps> right_mul(int j, const Exps& r) const;
    std::pair<int, Exps> left_mul(const Exps& a, const Exps& b) const;
    int left_sign(const Exps& a) const;

    const KList& bracket(int i, const Exps& L) const;
    KList compute_bracket(int i, const Exps& L) const;
    // X * l^rest for a list X of K-terms.
    void append_times_left(KList& out, const KList& x, const Exps& rest, int sign) const;

    Element apply_right(int i, const Element& b) const;
    Element apply_k(CliffordMono cl, std::uint32_t g, const Element& b) const;
    Element apply_left(const Exps& a, const Element& b) const;

    std::string group_part_str(std::uint32_t g) const;

    AlgebraSpec spec_;
    const SpinWeyl* sw_;
    std::uint32_t id_code_;
    std::vector<std::vector<Element>> rel_;
    std::vector<std::vector<KList>> swap_;  // r_i l_j = eps l_j r_i + swap_[i][j]
    mutable std::mutex mu_;
    mutable std::unordered_map<std::uint64_t, KList> memo_;
};

}  // namespace daha
