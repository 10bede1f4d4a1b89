#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "daha/algebra.hpp"
#include "daha/pbw.hpp"
#include "daha/smash.hpp"
#include "daha/tensor.hpp"

namespace daha {

// Sum of coefficient * (product of generators), not yet normalized in any
// algebra.
struct FreeTerm {
    Scalar coeff;
    std::vector<Gen> word;
};
using FreeExpr = std::vector<FreeTerm>;

// Each basis monomial replaced by its generator factorization.
FreeExpr to_free(const Algebra& alg, const Element& a);
std::string free_str(const FreeExpr& e);

struct Relation {
    std::string label;
    FreeExpr lhs, rhs;
};

// A presentation of the algebra: g h = NF(g h) for every ordered pair of
// generators whose product is not already a basis monomial, the braid
// relations (g_a g_b)^m = NF((g_a g_b)^m) among group generators, and for
// PBW algebras the bracket relations as printed.
std::vector<Relation> defining_relations(const Algebra& alg);

struct GeneratorMap {
    std::string name;
    std::shared_ptr<const Algebra> source, target;
    std::map<Gen, Element> images;
    // Parameter transform of the target, as text.
    std::string params;

    const Element& image(const Gen& g) const;
    Element eval(const FreeExpr& e) const;
    // Image of a source element, through the factorization of its monomials.
    Element apply(const Element& a) const;
};

struct RelationResult {
    std::string label;
    bool pass = false;
    Element residual;
};

struct HomReport {
    std::string map;
    std::vector<RelationResult> relations;
    // Generators whose image is inhomogeneous or of the wrong parity.
    std::vector<Gen> parity_failures;
    bool pass() const;
    std::size_t failures() const;
};

// Every source relation must map to zero, and every image must have the
// parity of its generator.
HomReport check_homomorphism(const GeneratorMap& m);

// Generators g of `first.source` with second(first(g)) != g.
std::vector<Gen> round_trip_failures(const GeneratorMap& first, const GeneratorMap& second);

// second o first, on generators.
GeneratorMap compose_maps(const GeneratorMap& second, const GeneratorMap& first);

enum class MapKind { PhiDot, PhiKw, PhiDdot, PhiPlus, HtoSH, SHtoOH };
std::string map_kind_name(MapKind k);
MapKind map_kind_from_name(const std::string& s);
std::vector<MapKind> all_map_kinds();

struct MapPair {
    GeneratorMap forward, inverse;
};

// phidot   C x|- CW-  -> C (x) CW           t_i -> beta_i s_i
// phikw    C(e) x| CW -> C(e) (x) CW-       s_i -> -i nu_i t_i
// phiddot  C(c,e) x| CW -> C(c,e) (x) CW    s_i -> i beta_i nu_i s_i
// phiplus  C x|+ CW-  -> C (x) CW (odd s)   t_i -> -i beta_i s_i
// h2sh     H(t,u,v)  -> C(e) (x) sH(-t, -i*r2*u, i*v)
//          y_i -> e_i eta_i, s_i -> -i nu_i t_i, x_i -> x_i, c_i -> c_i
// sh2oh    sH(t,u,v) -> C(c) (x) oH(-t, r2*u, -v)
//          x_i -> c_i xi_i, t_i -> beta_i s_i, eta_i -> eta_i
MapPair make_map(MapKind k, const WeylType& ty);

// The two factors phikw (extended by the identity on the c's) and phidot
// (extended by the identity on the e's) whose composite is phiddot.
MapPair phiddot_factors(const WeylType& ty);

// H -> C(c,e) (x) oH(t, -2i*u, -i*v) as the composite of h2sh with sh2oh
// extended by the identity on the outer e's. With wrong_params the target
// is built with u -> 2i*u instead.
GeneratorMap morita_composite(const WeylType& ty, bool wrong_params = false);

// Named image identities that accompany the maps:
//   phikw   (e_k - e_i) s_ik -> -i*r2 [k,i], (e_k + e_i) ~s_ik -> -i*r2 ~[k,i],
//           e_i tau_i -> -i ~[i]
//   sh2oh   (c_k - c_i) [k,i] -> r2 s_ki, (c_k + c_i) ~[k,i] -> r2 ~s_ik,
//           c_i ~[i] -> tau_i
//   phidot  (phidot(t_i) phidot(t_j))^{m_ij} -> (-1)^{m_ij + 1}
//   phiplus (phiplus(t_i) phiplus(t_j))^{m_ij} -> (-1)^{m_ij + 1}
struct ImageIdentity {
    std::string label;
    Element actual;
    Element expected;
    bool pass() const { return actual == expected; }
};
std::vector<ImageIdentity> image_identities(MapKind k, const MapPair& maps);

// Negative control: phidot with t_1 -> c_1 s_1, which breaks t_1 c_2 = -c_2^{s_1} t_1.
GeneratorMap corrupted_phidot(const WeylType& ty);

// Linear independence of the images of the PBW basis monomials of
// polynomial degree <= degree, with t, u, v specialized to 2, 3, 5 and
// coefficients reduced modulo the prime 998244353 (where sqrt(-1) and
// sqrt(2) exist). Full rank modulo p implies full rank over Q(i, r2).
struct RankReport {
    std::size_t basis_size = 0;
    std::size_t rank = 0;
    bool full() const { return rank == basis_size; }
};
RankReport rank_check(const GeneratorMap& m, int degree);

// PBW basis monomials of polynomial degree <= degree.
std::vector<Mono> pbw_basis(const PBWAlgebra& alg, int degree);

}  // namespace daha
