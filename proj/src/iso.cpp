#include "daha/iso.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

namespace daha {

FreeExpr to_free(const Algebra& alg, const Element& a) {
    FreeExpr out;
    for (const auto& [m, s] : a.terms()) out.push_back({s, alg.factor(m)});
    return out;
}

std::string free_str(const FreeExpr& e) {
    if (e.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : e) {
        std::string w;
        for (const Gen& g : t.word) w += (w.empty() ? "" : "*") + gen_name(g);
        out += render_term(t.coeff, w, first);
        first = false;
    }
    return out;
}

namespace {

FreeExpr word_expr(std::vector<Gen> w, const Scalar& c = Scalar(1)) { return {FreeTerm{c, std::move(w)}}; }

bool is_group_gen(const Gen& g) { return g.sym == Sym::s || g.sym == Sym::t; }

}  // namespace

std::vector<Relation> defining_relations(const Algebra& alg) {
    std::vector<Relation> out;
    const std::vector<Gen> gens = alg.generators();
    for (const Gen& g : gens)
        for (const Gen& h : gens) {
            const Element prod = alg.mul(alg.gen(g), alg.gen(h));
            FreeExpr rhs = to_free(alg, prod);
            if (rhs.size() == 1 && rhs[0].coeff.is_one() && rhs[0].word == std::vector<Gen>{g, h}) continue;
            out.push_back({gen_name(g) + "*" + gen_name(h), word_expr({g, h}), std::move(rhs)});
        }
    std::vector<Gen> group;
    for (const Gen& g : gens)
        if (is_group_gen(g)) group.push_back(g);
    for (std::size_t a = 0; a < group.size(); ++a)
        for (std::size_t b = a + 1; b < group.size(); ++b) {
            const int m = alg.type().coxeter_m(group[a].i, group[b].i);
            if (m <= 2) continue;
            std::vector<Gen> w;
            for (int k = 0; k < m; ++k) {
                w.push_back(group[a]);
                w.push_back(group[b]);
            }
            out.push_back({"(" + gen_name(group[a]) + "*" + gen_name(group[b]) + ")^" + std::to_string(m),
                           word_expr(w), to_free(alg, alg.word(w))});
        }
    if (const auto* p = dynamic_cast<const PBWAlgebra*>(&alg)) {
        const Sym L = p->left_sym(), R = p->right_sym();
        const bool anti = p->family() == FamilyKind::oH;
        const int n = p->type().n;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const Gen r{R, i}, l{L, j};
                // H: [y_i, x_j]; sH: [eta_i, x_j] with eta on the left; oH: [eta_i, xi_j]_+
                Gen a = r, b = l;
                if (p->family() == FamilyKind::sH) {
                    a = {Sym::eta, i};
                    b = {Sym::x, j};
                }
                FreeExpr lhs = {{Scalar(1), {a, b}}, {Scalar(anti ? 1 : -1), {b, a}}};
                std::string label = "[" + gen_name(a) + "," + gen_name(b) + (anti ? "]_+" : "]");
                out.push_back({label, std::move(lhs), to_free(alg, p->relation(i, j))});
            }
    }
    return out;
}

const Element& GeneratorMap::image(const Gen& g) const {
    auto it = images.find(g);
    if (it == images.end()) throw std::invalid_argument(name + ": no image for " + gen_name(g));
    return it->second;
}

Element GeneratorMap::eval(const FreeExpr& e) const {
    Element r;
    for (const auto& t : e) {
        Element p = target->one();
        for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) p = target->mul(image(*it), p);
        r.add_scaled(p, t.coeff);
    }
    return r;
}

Element GeneratorMap::apply(const Element& a) const { return eval(to_free(*source, a)); }

bool HomReport::pass() const { return failures() == 0; }

std::size_t HomReport::failures() const {
    std::size_t k = parity_failures.size();
    for (const auto& r : relations)
        if (!r.pass) ++k;
    return k;
}

HomReport check_homomorphism(const GeneratorMap& m) {
    HomReport rep;
    rep.map = m.name;
    for (const Gen& g : m.source->generators()) {
        const Element& img = m.image(g);
        try {
            if (!img.is_zero() && m.target->parity(img) != m.source->gen_parity(g)) rep.parity_failures.push_back(g);
        } catch (const std::invalid_argument&) {
            rep.parity_failures.push_back(g);
        }
    }
    for (const Relation& rel : defining_relations(*m.source)) {
        Element res = m.eval(rel.lhs) - m.eval(rel.rhs);
        rep.relations.push_back({rel.label, res.is_zero(), std::move(res)});
    }
    return rep;
}

std::vector<Gen> round_trip_failures(const GeneratorMap& first, const GeneratorMap& second) {
    std::vector<Gen> bad;
    for (const Gen& g : first.source->generators())
        if (!(second.apply(first.image(g)) == first.source->gen(g))) bad.push_back(g);
    return bad;
}

GeneratorMap compose_maps(const GeneratorMap& second, const GeneratorMap& first) {
    GeneratorMap m;
    m.name = second.name + " o " + first.name;
    m.source = first.source;
    m.target = second.target;
    m.params = second.params;
    for (const Gen& g : first.source->generators()) m.images[g] = second.apply(first.image(g));
    return m;
}

std::string map_kind_name(MapKind k) {
    switch (k) {
        case MapKind::PhiDot: return "phidot";
        case MapKind::PhiKw: return "phikw";
        case MapKind::PhiDdot: return "phiddot";
        case MapKind::PhiPlus: return "phiplus";
        case MapKind::HtoSH: return "h2sh";
        case MapKind::SHtoOH: return "sh2oh";
    }
    return "?";
}

MapKind map_kind_from_name(const std::string& s) {
    for (MapKind k : all_map_kinds())
        if (map_kind_name(k) == s) return k;
    throw std::invalid_argument("unknown map '" + s + "'");
}

std::vector<MapKind> all_map_kinds() {
    return {MapKind::PhiDot, MapKind::PhiKw, MapKind::PhiDdot, MapKind::PhiPlus, MapKind::HtoSH, MapKind::SHtoOH};
}

namespace {

using AlgPtr = std::shared_ptr<const Algebra>;

AlgPtr cg(const CliffGroupConfig& cfg) { return std::make_shared<CliffGroupAlgebra>(cfg); }

Element beta_in(const Algebra& a, const WeylType& ty, int k, bool outer = false) {
    return a.clifford(beta(ty, k), outer);
}

Element nu_in(const Algebra& a, const WeylType& ty, int k, bool outer = false) { return a.clifford(nu(ty, k), outer); }

// Clifford and group generators mapped through `group_image`, everything
// else to the same-named generator of the target.
GeneratorMap clifford_group_map(const std::string& name, AlgPtr src, AlgPtr tgt,
                                const std::function<Element(int)>& group_image) {
    GeneratorMap m;
    m.name = name;
    m.source = src;
    m.target = tgt;
    m.params = "(t,u,v) -> (t,u,v)";
    for (const Gen& g : src->generators()) {
        if (is_group_gen(g)) m.images[g] = group_image(g.i);
        else m.images[g] = tgt->gen(g);
    }
    return m;
}

std::shared_ptr<const PBWAlgebra> pbw(FamilyKind f, const WeylType& ty, const Scalar& t, const Scalar& u,
                                      const std::optional<Scalar>& v) {
    AlgebraSpec s = AlgebraSpec::formal(f, ty);
    s.t = t;
    s.u = u;
    s.v = v;
    return std::make_shared<PBWAlgebra>(s);
}

std::optional<Scalar> scaled_v(const WeylType& ty, const Scalar& factor) {
    if (ty.family != Family::B) return std::nullopt;
    return factor * Scalar::v();
}

const Scalar kI = Scalar::i();
const Scalar kR2 = Scalar::sqrt2();

MapPair h2sh(const WeylType& ty) {
    auto H = pbw(FamilyKind::H, ty, Scalar::t(), Scalar::u(), scaled_v(ty, 1));
    auto S = pbw(FamilyKind::sH, ty, -Scalar::t(), -kI * kR2 * Scalar::u(), scaled_v(ty, kI));
    auto T = std::make_shared<TensorAlgebra>(S, false, true);
    const int n = ty.n;
    MapPair mp;
    GeneratorMap& f = mp.forward;
    f.name = "h2sh";
    f.source = H;
    f.target = T;
    f.params = "(t,u,v) -> (-t, -i*r2*u, i*v)";
    for (int k = 1; k <= n; ++k) {
        f.images[{Sym::x, k}] = T->gen({Sym::x, k});
        f.images[{Sym::c, k}] = T->gen({Sym::c, k});
        f.images[{Sym::e, k}] = T->gen({Sym::outer_e, k});
        f.images[{Sym::y, k}] = T->mul(T->gen({Sym::outer_e, k}), T->gen({Sym::eta, k}));
    }
    for (int a = 1; a <= ty.num_generators(); ++a)
        f.images[{Sym::s, a}] = -kI * T->mul(nu_in(*T, ty, a, true), T->gen({Sym::t, a}));
    GeneratorMap& g = mp.inverse;
    g.name = "h2sh^-1";
    g.source = T;
    g.target = H;
    g.params = "inverse";
    for (int k = 1; k <= n; ++k) {
        g.images[{Sym::x, k}] = H->gen({Sym::x, k});
        g.images[{Sym::c, k}] = H->gen({Sym::c, k});
        g.images[{Sym::outer_e, k}] = H->gen({Sym::e, k});
        g.images[{Sym::eta, k}] = H->mul(H->gen({Sym::e, k}), H->gen({Sym::y, k}));
    }
    for (int a = 1; a <= ty.num_generators(); ++a)
        g.images[{Sym::t, a}] = kI * H->mul(nu_in(*H, ty, a), H->gen({Sym::s, a}));
    return mp;
}

// sH with parameters (t, u, v) -> C(c) (x) oH(-t, r2*u, -v).
MapPair sh2oh_with(const WeylType& ty, std::shared_ptr<const PBWAlgebra> S) {
    const AlgebraSpec& sp = S->spec();
    std::optional<Scalar> v;
    if (sp.v) v = -*sp.v;
    auto O = pbw(FamilyKind::oH, ty, -sp.t, kR2 * sp.u, v);
    auto T = std::make_shared<TensorAlgebra>(O, true, false);
    const int n = ty.n;
    MapPair mp;
    GeneratorMap& f = mp.forward;
    f.name = "sh2oh";
    f.source = S;
    f.target = T;
    f.params = "(t,u,v) -> (-t, r2*u, -v)";
    for (int k = 1; k <= n; ++k) {
        f.images[{Sym::eta, k}] = T->gen({Sym::eta, k});
        f.images[{Sym::c, k}] = T->gen({Sym::outer_c, k});
        f.images[{Sym::x, k}] = T->mul(T->gen({Sym::outer_c, k}), T->gen({Sym::xi, k}));
    }
    for (int a = 1; a <= ty.num_generators(); ++a)
        f.images[{Sym::t, a}] = T->mul(beta_in(*T, ty, a, true), T->gen({Sym::s, a}));
    GeneratorMap& g = mp.inverse;
    g.name = "sh2oh^-1";
    g.source = T;
    g.target = S;
    g.params = "inverse";
    for (int k = 1; k <= n; ++k) {
        g.images[{Sym::eta, k}] = S->gen({Sym::eta, k});
        g.images[{Sym::outer_c, k}] = S->gen({Sym::c, k});
        g.images[{Sym::xi, k}] = S->mul(S->gen({Sym::c, k}), S->gen({Sym::x, k}));
    }
    for (int a = 1; a <= ty.num_generators(); ++a)
        g.images[{Sym::s, a}] = S->mul(beta_in(*S, ty, a), S->gen({Sym::t, a}));
    return mp;
}

}  // namespace

MapPair make_map(MapKind k, const WeylType& ty) {
    MapPair mp;
    switch (k) {
        case MapKind::PhiDot: {
            AlgPtr src = cg(CliffGroupAlgebra::smash_spin_minus(ty));
            AlgPtr tgt = cg(CliffGroupAlgebra::tensor_plain(ty, true, false, false));
            mp.forward = clifford_group_map("phidot", src, tgt, [&](int a) {
                return tgt->mul(beta_in(*tgt, ty, a), tgt->gen({Sym::s, a}));
            });
            mp.inverse = clifford_group_map("phidot^-1", tgt, src, [&](int a) {
                return src->mul(beta_in(*src, ty, a), src->gen({Sym::t, a}));
            });
            break;
        }
        case MapKind::PhiKw: {
            AlgPtr src = cg(CliffGroupAlgebra::smash_plain(ty, false, true));
            AlgPtr tgt = cg(CliffGroupAlgebra::tensor_spin(ty, false, true));
            mp.forward = clifford_group_map("phikw", src, tgt, [&](int a) {
                return -kI * tgt->mul(nu_in(*tgt, ty, a), tgt->gen({Sym::t, a}));
            });
            mp.inverse = clifford_group_map("phikw^-1", tgt, src, [&](int a) {
                return kI * src->mul(nu_in(*src, ty, a), src->gen({Sym::s, a}));
            });
            break;
        }
        case MapKind::PhiDdot: {
            AlgPtr src = cg(CliffGroupAlgebra::smash_plain(ty, true, true));
            AlgPtr tgt = cg(CliffGroupAlgebra::tensor_plain(ty, true, true, false));
            mp.forward = clifford_group_map("phiddot", src, tgt, [&](int a) {
                return kI * tgt->mul({beta_in(*tgt, ty, a), nu_in(*tgt, ty, a), tgt->gen({Sym::s, a})});
            });
            mp.inverse = clifford_group_map("phiddot^-1", tgt, src, [&](int a) {
                return kI * src->mul({beta_in(*src, ty, a), nu_in(*src, ty, a), src->gen({Sym::s, a})});
            });
            break;
        }
        case MapKind::PhiPlus: {
            AlgPtr src = cg(CliffGroupAlgebra::smash_spin_plus(ty));
            AlgPtr tgt = cg(CliffGroupAlgebra::tensor_plain(ty, true, false, true));
            mp.forward = clifford_group_map("phiplus", src, tgt, [&](int a) {
                return -kI * tgt->mul(beta_in(*tgt, ty, a), tgt->gen({Sym::s, a}));
            });
            mp.inverse = clifford_group_map("phiplus^-1", tgt, src, [&](int a) {
                return kI * src->mul(beta_in(*src, ty, a), src->gen({Sym::t, a}));
            });
            break;
        }
        case MapKind::HtoSH:
            return h2sh(ty);
        case MapKind::SHtoOH:
            return sh2oh_with(ty, pbw(FamilyKind::sH, ty, Scalar::t(), Scalar::u(), scaled_v(ty, 1)));
    }
    return mp;
}

MapPair phiddot_factors(const WeylType& ty) {
    AlgPtr src = cg(CliffGroupAlgebra::smash_plain(ty, true, true));
    AlgPtr mid = cg(CliffGroupAlgebra::mixed_spin(ty));
    AlgPtr tgt = cg(CliffGroupAlgebra::tensor_plain(ty, true, true, false));
    MapPair mp;
    mp.forward = clifford_group_map("phikw (x) id", src, mid, [&](int a) {
        return -kI * mid->mul(nu_in(*mid, ty, a), mid->gen({Sym::t, a}));
    });
    mp.inverse = clifford_group_map("phidot (x) id", mid, tgt, [&](int a) {
        return tgt->mul(beta_in(*tgt, ty, a), tgt->gen({Sym::s, a}));
    });
    return mp;
}

GeneratorMap morita_composite(const WeylType& ty, bool wrong_params) {
    const GeneratorMap first = h2sh(ty).forward;
    auto T1 = std::static_pointer_cast<const TensorAlgebra>(first.target);
    const Scalar u2 = (wrong_params ? Scalar(2) : Scalar(-2)) * kI * Scalar::u();
    auto O = pbw(FamilyKind::oH, ty, Scalar::t(), u2, scaled_v(ty, -kI));
    auto T2 = std::make_shared<TensorAlgebra>(O, true, true);
    const int n = ty.n;
    GeneratorMap second;
    second.name = "id (x) sh2oh";
    second.source = T1;
    second.target = T2;
    for (int k = 1; k <= n; ++k) {
        second.images[{Sym::outer_e, k}] = T2->gen({Sym::outer_e, k});
        second.images[{Sym::eta, k}] = T2->gen({Sym::eta, k});
        second.images[{Sym::c, k}] = T2->gen({Sym::outer_c, k});
        second.images[{Sym::x, k}] = T2->mul(T2->gen({Sym::outer_c, k}), T2->gen({Sym::xi, k}));
    }
    for (int a = 1; a <= ty.num_generators(); ++a)
        second.images[{Sym::t, a}] = T2->mul(beta_in(*T2, ty, a, true), T2->gen({Sym::s, a}));
    GeneratorMap m = compose_maps(second, first);
    m.name = wrong_params ? "h2oh (wrong u)" : "h2oh";
    m.params = wrong_params ? "(t,u,v) -> (t, 2i*u, -i*v)" : "(t,u,v) -> (t, -2i*u, -i*v)";
    return m;
}

std::vector<ImageIdentity> image_identities(MapKind k, const MapPair& maps) {
    std::vector<ImageIdentity> out;
    const GeneratorMap& f = maps.forward;
    const Algebra& S = *f.source;
    const Algebra& T = *f.target;
    const WeylType& ty = S.type();
    const int n = ty.n;
    const bool bd = ty.family != Family::A, b = ty.family == Family::B;
    auto grp = [&](const Algebra& a, ReflectionKind rk, int i, int j) {
        return a.group_element(reflection(ty, rk, i, j));
    };
    auto spn = [&](const Algebra& a, SpinReflectionKind sk, int i, int j) {
        return a.spin_element(spin_reflection(ty, sk, i, j));
    };
    auto idx = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
    switch (k) {
        case MapKind::PhiKw:
            for (int i = 1; i <= n; ++i) {
                for (int kk = 1; kk <= n; ++kk) {
                    if (kk == i) continue;
                    const Element ek = S.gen({Sym::e, kk}), ei = S.gen({Sym::e, i});
                    out.push_back({"(e" + std::to_string(kk) + " - e" + std::to_string(i) + ")(" + idx(i, kk) + ")",
                                   f.apply(S.mul(ek - ei, grp(S, ReflectionKind::Plain, i, kk))),
                                   -kI * kR2 * spn(T, SpinReflectionKind::Plain, kk, i)});
                    if (bd)
                        out.push_back({"(e" + std::to_string(kk) + " + e" + std::to_string(i) + ")~(" + idx(i, kk) + ")",
                                       f.apply(S.mul(ek + ei, grp(S, ReflectionKind::Barred, i, kk))),
                                       -kI * kR2 * spn(T, SpinReflectionKind::Barred, kk, i)});
                }
                if (b)
                    out.push_back({"e" + std::to_string(i) + "*tau" + std::to_string(i),
                                   f.apply(S.mul(S.gen({Sym::e, i}), grp(S, ReflectionKind::Tau, i, 0))),
                                   -kI * spn(T, SpinReflectionKind::BarSingle, i, 0)});
            }
            break;
        case MapKind::SHtoOH:
            for (int i = 1; i <= n; ++i) {
                for (int kk = 1; kk <= n; ++kk) {
                    if (kk == i) continue;
                    const Element ck = S.gen({Sym::c, kk}), ci = S.gen({Sym::c, i});
                    out.push_back({"(c" + std::to_string(kk) + " - c" + std::to_string(i) + ")[" + idx(kk, i) + "]",
                                   f.apply(S.mul(ck - ci, spn(S, SpinReflectionKind::Plain, kk, i))),
                                   kR2 * grp(T, ReflectionKind::Plain, kk, i)});
                    if (bd)
                        out.push_back({"(c" + std::to_string(kk) + " + c" + std::to_string(i) + ")~[" + idx(kk, i) + "]",
                                       f.apply(S.mul(ck + ci, spn(S, SpinReflectionKind::Barred, kk, i))),
                                       kR2 * grp(T, ReflectionKind::Barred, i, kk)});
                }
                if (b)
                    out.push_back({"c" + std::to_string(i) + "*~[" + std::to_string(i) + "]",
                                   f.apply(S.mul(S.gen({Sym::c, i}), spn(S, SpinReflectionKind::BarSingle, i, 0))),
                                   grp(T, ReflectionKind::Tau, i, 0)});
            }
            break;
        case MapKind::PhiDot:
        case MapKind::PhiPlus:
            for (int a = 1; a <= ty.num_generators(); ++a)
                for (int bb = a + 1; bb <= ty.num_generators(); ++bb) {
                    const int m = ty.coxeter_m(a, bb);
                    const Element p = T.mul(f.image({Sym::t, a}), f.image({Sym::t, bb}));
                    out.push_back({"(image(t" + std::to_string(a) + ")*image(t" + std::to_string(bb) + "))^" +
                                       std::to_string(m),
                                   T.pow(p, static_cast<unsigned>(m)), T.scalar(Scalar((m % 2) ? 1 : -1))});
                }
            break;
        case MapKind::PhiDdot: {
            const MapPair fac = phiddot_factors(ty);
            const GeneratorMap comp = compose_maps(fac.inverse, fac.forward);
            for (const Gen& g : S.generators())
                out.push_back({"phiddot(" + gen_name(g) + ") = phidot(phikw(" + gen_name(g) + "))", comp.image(g),
                               f.image(g)});
            break;
        }
        case MapKind::HtoSH: {
            // image of the bracket relation [y_i, x_i] computed on both sides
            const auto& H = dynamic_cast<const PBWAlgebra&>(S);
            for (int i = 1; i <= n; ++i) {
                const Element lhs = H.commutator(H.gen({Sym::y, i}), H.gen({Sym::x, i}));
                out.push_back({"image of [y" + std::to_string(i) + ",x" + std::to_string(i) + "]", f.apply(lhs),
                               f.apply(H.relation(i, i))});
            }
            break;
        }
    }
    return out;
}

GeneratorMap corrupted_phidot(const WeylType& ty) {
    GeneratorMap m = make_map(MapKind::PhiDot, ty).forward;
    m.name = "phidot (corrupted)";
    m.images[{Sym::t, 1}] = m.target->mul(m.target->gen({Sym::c, 1}), m.target->gen({Sym::s, 1}));
    return m;
}

std::vector<Mono> pbw_basis(const PBWAlgebra& alg, int degree) {
    const WeylType& ty = alg.type();
    const int n = ty.n;
    std::vector<Exps> exps;
    Exps cur{};
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == n) {
            exps.push_back(cur);
            return;
        }
        for (int p = 0; p <= left; ++p) {
            cur[k] = static_cast<std::uint8_t>(p);
            rec(k + 1, left - p);
        }
        cur[k] = 0;
    };
    rec(0, degree);
    std::vector<CliffordMono> cls;
    const unsigned cmask = alg.family() == FamilyKind::oH ? 0u : (1u << n) - 1;
    const unsigned emask = alg.family() == FamilyKind::H ? (1u << n) - 1 : 0u;
    for (unsigned c = 0; c <= cmask; ++c)
        for (unsigned e = 0; e <= emask; ++e) cls.push_back(CliffordMono(c | (e << 8)));
    std::vector<Mono> out;
    for (const Exps& L : exps)
        for (const Exps& R : exps) {
            if (total_degree(L) + total_degree(R) > degree) continue;
            for (CliffordMono cl : cls)
                for (const GroupElement& w : enumerate(ty)) {
                    Mono m;
                    m.L = L;
                    m.R = R;
                    m.cl = cl;
                    m.g = w.code();
                    out.push_back(m);
                }
        }
    return out;
}

namespace {

constexpr std::uint64_t kP = 998244353;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return static_cast<unsigned __int128>(a) * b % kP; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1) r = mulmod(r, a);
    return r;
}

std::uint64_t to_mod(std::int64_t x) {
    std::int64_t r = x % static_cast<std::int64_t>(kP);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(kP) : r);
}

// 3 generates the multiplicative group; zeta is a primitive 8th root of
// unity, i = zeta^2 and r2 = zeta + zeta^-1.
struct Roots {
    std::uint64_t i, r2;
    Roots() {
        const std::uint64_t zeta = powmod(3, (kP - 1) / 8);
        i = mulmod(zeta, zeta);
        r2 = (zeta + powmod(zeta, kP - 2)) % kP;
    }
};

std::uint64_t reduce(const QExt& q, const Roots& R) {
    std::uint64_t v = to_mod(q.a());
    v = (v + mulmod(to_mod(q.b()), R.r2)) % kP;
    v = (v + mulmod(to_mod(q.c()), R.i)) % kP;
    v = (v + mulmod(to_mod(q.d()), mulmod(R.i, R.r2))) % kP;
    return mulmod(v, powmod(to_mod(q.den()), kP - 2));
}

}  // namespace

RankReport rank_check(const GeneratorMap& m, int degree) {
    const auto* src = dynamic_cast<const PBWAlgebra*>(m.source.get());
    if (!src) throw std::invalid_argument("rank_check needs a PBW source algebra");
    const Roots roots;
    using Row = std::map<Mono, std::uint64_t>;
    std::map<Mono, Row> pivots;
    RankReport rep;
    for (const Mono& b : pbw_basis(*src, degree)) {
        ++rep.basis_size;
        const Element img = m.apply(Element::mono(b)).substituted(Scalar(2), Scalar(3), Scalar(5));
        Row row;
        for (const auto& [mono, s] : img.terms()) {
            if (!s.is_constant()) throw std::logic_error("rank_check: coefficient not constant after substitution");
            std::uint64_t v = reduce(s.constant(), roots);
            if (v) row[mono] = v;
        }
        while (!row.empty()) {
            auto lead = row.begin();
            auto pv = pivots.find(lead->first);
            if (pv == pivots.end()) {
                const std::uint64_t inv = powmod(lead->second, kP - 2);
                for (auto& [k, v] : row) v = mulmod(v, inv);
                pivots.emplace(lead->first, std::move(row));
                ++rep.rank;
                break;
            }
            const std::uint64_t f = lead->second;
            for (const auto& [k, v] : pv->second) {
                std::uint64_t& x = row[k];
                x = (x + kP - mulmod(f, v)) % kP;
                if (!x) row.erase(k);
            }
        }
    }
    return rep;
}

}  // namespace daha
