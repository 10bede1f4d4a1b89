#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "daha/clifford.hpp"
#include "daha/scalar.hpp"
#include "daha/skewpoly.hpp"
#include "daha/spinweyl.hpp"
#include "daha/weyl.hpp"

namespace daha {

// Universal monomial shared by every algebra in the library. Each algebra
// reads only the fields it uses:
//   L     left polynomial block (x for H, eta for sH, xi for oH)
//   cl    inner Clifford part, c's in the low byte and e's in the high byte
//   g     group element code (plain or spin)
//   R     right polynomial block (y for H, x for sH, eta for oH)
//   outer Clifford factor of a tensor product C (x) A
struct Mono {
    Exps L{};
    CliffordMono cl = 0;
    std::uint32_t g = 0;
    Exps R{};
    CliffordMono outer = 0;
    auto operator<=>(const Mono&) const = default;
};

// Generator symbols. outer_c / outer_e are the generators of the outer
// Clifford factor of a tensor product.
enum class Sym : std::uint8_t { x, y, c, e, s, t, xi, eta, outer_c, outer_e };

struct Gen {
    Sym sym;
    int i;
    auto operator<=>(const Gen&) const = default;
};

std::string gen_name(const Gen& g);

class Element {
public:
    using Map = std::map<Mono, Scalar>;

    Element() = default;
    static Element mono(const Mono& m, const Scalar& s = Scalar(1));

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    void add(const Mono& m, const Scalar& s);
    void add_scaled(const Element& x, const Scalar& s);

    Element operator-() const;
    friend Element operator+(const Element& x, const Element& y);
    friend Element operator-(const Element& x, const Element& y);
    friend Element operator*(const Scalar& s, const Element& x);
    Element& operator+=(const Element& y);
    Element& operator-=(const Element& y);
    friend bool operator==(const Element&, const Element&) = default;

    // Apply a parameter substitution to every coefficient.
    Element substituted(const Scalar& t, const Scalar& u, const Scalar& v) const;

private:
    Map terms_;
};

// Common interface of all algebras: normal-form multiplication on the
// universal monomials, generator access, factorization of basis monomials
// into generator words, and rendering.
class Algebra {
public:
    virtual ~Algebra() = default;

    virtual std::string name() const = 0;
    // Short family label used in serialized output; defaults to name().
    virtual std::string family_label() const { return name(); }
    virtual const WeylType& type() const = 0;
    virtual Mono unit_mono() const = 0;
    virtual std::vector<Gen> generators() const = 0;
    // Throws std::invalid_argument for a generator the algebra lacks.
    virtual Element gen(const Gen& g) const = 0;
    virtual int gen_parity(const Gen& g) const = 0;
    virtual int parity(const Mono& m) const = 0;
    // Left multiplication of b by a basis monomial.
    virtual Element mul_mono(const Mono& a, const Element& b) const = 0;
    // Generator word whose ordered product is exactly the basis monomial.
    virtual std::vector<Gen> factor(const Mono& m) const = 0;
    virtual std::string mono_str(const Mono& m) const = 0;
    virtual nlohmann::json mono_json(const Mono& m) const = 0;

    // Group atoms; the defaults throw std::invalid_argument.
    virtual Element group_element(const GroupElement& w) const;
    virtual Element spin_element(const SpinElement& s) const;

    bool has_generator(const Gen& g) const;
    Element one() const { return Element::mono(unit_mono()); }
    Element scalar(const Scalar& s) const { return Element::mono(unit_mono(), s); }
    Element mul(const Element& a, const Element& b) const;
    Element mul(std::initializer_list<Element> factors) const;
    Element pow(const Element& a, unsigned k) const;
    Element word(const std::vector<Gen>& w) const;
    Element commutator(const Element& a, const Element& b) const;
    Element anticommutator(const Element& a, const Element& b) const;
    // [a, b} = ab - (-1)^{|a||b|} ba for homogeneous a, b.
    Element supercommutator(const Element& a, const Element& b) const;
    // 0 or 1; throws std::invalid_argument for an inhomogeneous element.
    int parity(const Element& a) const;
    // Linear combination of c's (e's) taken from a Clifford element.
    Element clifford(const CliffordElement& x, bool outer = false) const;

    std::string str(const Element& a) const;
    nlohmann::json to_json(const Element& a) const;
};

// Rendering helpers shared by the algebras.
std::string render_term(const Scalar& s, const std::string& mono, bool first);
nlohmann::json scalar_json(const Scalar& s);
std::string exps_str(const Exps& a, const std::string& var);
nlohmann::json exps_json(const Exps& a, int n);
nlohmann::json bits_json(CliffordMono m, int offset, int n);
// Plain group element: identity is "", reflections "(1,2)", "~(1,2)",
// "tau1", otherwise a word "s1*s2".
std::string group_str(const WeylType& ty, std::uint32_t code);
// Spin basis element as a word "t1*t2"; identity is "".
std::string spin_str(const WeylType& ty, std::uint32_t code);
std::string join_factors(const std::vector<std::string>& parts);

}  // namespace daha
