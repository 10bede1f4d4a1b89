#include "daha/dunkl.hpp"

#include <stdexcept>
#include <unordered_map>

namespace daha {

namespace {

Exps add_exps(const Exps& a, const Exps& b) {
    Exps c;
    for (int k = 0; k < kMaxRank; ++k) c[k] = static_cast<std::uint8_t>(a[k] + b[k]);
    return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Carriers

CliffordCarrier::CliffordCarrier(const WeylType& ty, bool has_e, bool spin) : ty_(ty), has_e_(has_e), spin_(spin) {}

std::string CliffordCarrier::name() const {
    return spin_ ? "C_" + std::to_string(ty_.n) + " (t_a -> beta_a)" : "C_" + std::to_string(2 * ty_.n);
}

std::vector<std::uint16_t> CliffordCarrier::basis() const {
    std::vector<std::uint16_t> out;
    const unsigned top = 1u << ty_.n;
    for (unsigned e = 0; e < (has_e_ ? top : 1u); ++e)
        for (unsigned c = 0; c < top; ++c) out.push_back(static_cast<std::uint16_t>(c | (e << 8)));
    return out;
}

CarrierVec CliffordCarrier::act(const Gen& g, std::uint16_t b) const {
    CarrierVec out;
    switch (g.sym) {
        case Sym::c:
        case Sym::e: {
            if (g.sym == Sym::e && !has_e_) break;
            auto [sg, m] = mono_mul(g.sym == Sym::c ? c_bit(g.i) : e_bit(g.i), b);
            out[m] = Scalar(sg);
            return out;
        }
        case Sym::s: {
            if (spin_) break;
            auto [sg, m] = weyl_act(generator(ty_, g.i), b);
            out[m] = Scalar(sg);
            return out;
        }
        case Sym::t: {
            if (!spin_) break;
            const CliffordElement prod = beta(ty_, g.i) * CliffordElement::mono(b);
            for (const auto& [m, s] : prod.terms()) out[m] = s;
            return out;
        }
        default:
            break;
    }
    throw std::invalid_argument("generator " + gen_name(g) + " does not act on " + name());
}

std::string CliffordCarrier::basis_str(std::uint16_t b) const { return b ? mono_str(b) : "1"; }

nlohmann::json CliffordCarrier::basis_json(std::uint16_t b) const {
    nlohmann::json j;
    j["c"] = bits_json(b, 0, ty_.n);
    if (has_e_) j["e"] = bits_json(b, 8, ty_.n);
    return j;
}

CarrierVec TrivialCarrier::act(const Gen& g, std::uint16_t b) const {
    if (g.sym != Sym::s) throw std::invalid_argument("generator " + gen_name(g) + " does not act on the trivial module");
    return {{b, Scalar(1)}};
}

std::shared_ptr<const Carrier> default_carrier(const PBWAlgebra& alg) {
    switch (alg.family()) {
        case FamilyKind::H: return std::make_shared<CliffordCarrier>(alg.type(), true, false);
        case FamilyKind::sH: return std::make_shared<CliffordCarrier>(alg.type(), false, true);
        case FamilyKind::oH: return std::make_shared<TrivialCarrier>();
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// Module elements

ModuleElement ModuleElement::basis(const Exps& a, std::uint16_t m, const Scalar& s) {
    ModuleElement r;
    r.add({a, m}, s);
    return r;
}

void ModuleElement::add(const ModuleKey& k, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, s);
        return;
    }
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
}

void ModuleElement::add_scaled(const ModuleElement& x, const Scalar& s) {
    if (s.is_zero()) return;
    for (const auto& [k, c] : x.terms_) add(k, s * c);
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

ModuleElement operator+(const ModuleElement& x, const ModuleElement& y) {
    ModuleElement r = x;
    r += y;
    return r;
}

ModuleElement operator-(const ModuleElement& x, const ModuleElement& y) {
    ModuleElement r = x;
    r -= y;
    return r;
}

ModuleElement operator*(const Scalar& s, const ModuleElement& x) {
    ModuleElement r;
    r.add_scaled(x, s);
    return r;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& y) {
    for (const auto& [k, c] : y.terms_) add(k, c);
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& y) {
    for (const auto& [k, c] : y.terms_) add(k, -c);
    return *this;
}

// ---------------------------------------------------------------------------
// The module

VermaModule::VermaModule(std::shared_ptr<const PBWAlgebra> alg, std::shared_ptr<const Carrier> carrier,
                         DunklFaults faults)
    : alg_(std::move(alg)),
      carrier_(carrier ? std::move(carrier) : default_carrier(*alg_)),
      faults_(faults),
      subst_type_(Family::B, alg_->type().n) {}

Sym VermaModule::poly_sym() const { return alg_->family() == FamilyKind::oH ? Sym::xi : Sym::x; }

Sym VermaModule::dunkl_sym() const { return alg_->family() == FamilyKind::H ? Sym::y : Sym::eta; }

std::vector<ModuleKey> VermaModule::basis(int degree) const {
    const int n = alg_->type().n;
    std::vector<Exps> polys{Exps{}};
    for (int k = 0; k < n; ++k) {
        std::vector<Exps> next;
        for (const Exps& a : polys)
            for (int p = 0; total_degree(a) + p <= degree; ++p) {
                Exps b = a;
                b[k] = static_cast<std::uint8_t>(p);
                next.push_back(b);
            }
        polys = std::move(next);
    }
    std::vector<ModuleKey> out;
    for (const Exps& a : polys)
        for (std::uint16_t m : carrier_->basis()) out.push_back({a, m});
    return out;
}

template <bool Skew>
ModuleElement VermaModule::poly_times(const Poly<Skew>& p, const ModuleElement& v) const {
    ModuleElement r;
    for (const auto& [b, s] : p.terms())
        for (const auto& [k, c] : v.terms()) {
            const int sg = Skew ? skew_mul_sign(b, k.a) : 1;
            r.add({add_exps(b, k.a), k.m}, (s * c).negated_if(sg < 0));
        }
    return r;
}

template <bool Skew>
ModuleElement VermaModule::divide_left(const ModuleElement& v, const Poly<Skew>& d) const {
    const int n = alg_->type().n;
    std::map<std::uint16_t, Poly<Skew>> parts;
    for (const auto& [k, c] : v.terms()) parts.try_emplace(k.m, n).first->second.add(k.a, c);
    ModuleElement r;
    for (const auto& [m, f] : parts) {
        const Poly<Skew> q = exact_divide(f, d);
        for (const auto& [a, s] : q.terms()) r.add({a, m}, s);
    }
    return r;
}

ModuleElement VermaModule::act_k_gen(const Gen& g, const ModuleElement& v) const {
    const FamilyKind fam = alg_->family();
    ModuleElement r;
    std::optional<GroupElement> w;
    if (g.sym == Sym::s || g.sym == Sym::t) w = generator(alg_->type(), g.i);
    for (const auto& [k, c] : v.terms()) {
        Exps a = k.a;
        int sign = 1;
        switch (g.sym) {
            case Sym::c:
                // c_k x_k = -x_k c_k
                if (a[g.i - 1] & 1) sign = -1;
                break;
            case Sym::e:
                break;
            case Sym::s:
            case Sym::t: {
                // H, sH: x -> x^w signed; oH: xi -> xi^{w*}
                auto [sg, b] = act_exps(*w, a, fam == FamilyKind::oH, fam != FamilyKind::oH);
                sign = sg;
                a = b;
                break;
            }
            default:
                throw std::invalid_argument("generator " + gen_name(g) + " is not in K");
        }
        for (const auto& [m, s] : carrier_->act(g, k.m)) r.add({a, m}, (c * s).negated_if(sign < 0));
    }
    return r;
}

ModuleElement VermaModule::act_gen(const Gen& g, const ModuleElement& v) const {
    if (!alg_->has_generator(g)) throw std::invalid_argument("generator " + gen_name(g) + " not in " + alg_->name());
    const int n = alg_->type().n;
    if (g.sym == poly_sym()) {
        if (skew()) return poly_times(SkewPoly::var(n, g.i), v);
        return poly_times(CommPoly::var(n, g.i), v);
    }
    if (g.sym == dunkl_sym()) return dunkl(g.i, v);
    return act_k_gen(g, v);
}

ModuleElement VermaModule::act_word(const std::vector<Gen>& w, const ModuleElement& v) const {
    ModuleElement r = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (r.is_zero()) break;
        r = act_gen(*it, r);
    }
    return r;
}

ModuleElement VermaModule::act(const Element& a, const ModuleElement& v) const {
    ModuleElement r;
    for (const auto& [m, s] : a.terms()) r.add_scaled(act_word(alg_->factor(m), v), s);
    return r;
}

ModuleElement VermaModule::act(const FreeExpr& e, const ModuleElement& v) const {
    ModuleElement r;
    for (const auto& t : e) r.add_scaled(act_word(t.word, v), t.coeff);
    return r;
}

// ---------------------------------------------------------------------------
// Explicit Dunkl operators

ModuleElement VermaModule::dunkl(int i, const ModuleElement& v) const {
    if (i < 1 || i > alg_->type().n) throw std::out_of_range("Dunkl operator index out of range");
    ModuleElement r;
    for (const auto& [k, c] : v.terms()) {
        const auto key = std::make_pair(i, k);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) {
                r.add_scaled(it->second, c);
                continue;
            }
        }
        const ModuleElement b = ModuleElement::basis(k.a, k.m);
        ModuleElement img;
        switch (alg_->family()) {
            case FamilyKind::H: img = dunkl_y(i, b); break;
            case FamilyKind::sH: img = dunkl_eta_sH(i, b); break;
            case FamilyKind::oH: img = dunkl_eta_oH(i, b); break;
        }
        r.add_scaled(img, c);
        std::lock_guard<std::mutex> lock(mu_);
        memo_.try_emplace(key, std::move(img));
    }
    return r;
}

namespace {

// Polynomial part of v, split by carrier vector.
template <bool Skew>
std::map<std::uint16_t, Poly<Skew>> split(const ModuleElement& v, int n) {
    std::map<std::uint16_t, Poly<Skew>> parts;
    for (const auto& [k, c] : v.terms()) parts.try_emplace(k.m, n).first->second.add(k.a, c);
    return parts;
}

}  // namespace

// y_i (f (x) m) = t c_i e_i (f - f^{tau_i})/(2x_i) (x) m
//   - u sum_k [ (f - f^{s_ki})/(x_i - x_k) + (f - f^{~s_ki})/(x_i + x_k) c_k c_i ] (x) (1 + e_k e_i) s_ki m
//   - u sum_k [ (f - f^{~s_ki})/(x_i + x_k) - (f - f^{s_ki})/(x_i - x_k) c_k c_i ] (x) (1 - e_k e_i) ~s_ki m
//   - v (f - f^{tau_i})/(2x_i) (x) tau_i m
// The barred sum is present for types B and D, the v term for type B. For
// type A the second term is (f c_k c_i - c_k c_i f^{s_ki})/(x_i + x_k).
ModuleElement VermaModule::dunkl_y(int i, const ModuleElement& v) const {
    if (alg_->family() != FamilyKind::H) throw std::invalid_argument("dunkl_y needs family H");
    const WeylType& ty = alg_->type();
    const int n = ty.n;
    const PBWAlgebra& A = *alg_;
    const AlgebraSpec& sp = A.spec();
    const Element one = A.one();
    auto C = [&](int k) { return A.gen({Sym::c, k}); };
    auto E = [&](int k) { return A.gen({Sym::e, k}); };
    auto x = [&](int k) { return CommPoly::var(n, k); };
    const CommPoly two_xi = Scalar(2) * x(i);
    const Scalar u_sum = faults_.flip_reflection_sum ? -sp.u : sp.u;

    ModuleElement r;
    for (const auto& [m, f] : split<false>(v, n)) {
        const ModuleElement X = vacuum(m);
        const CommPoly P = exact_divide(f - signed_act(reflection(subst_type_, ReflectionKind::Tau, i), f), two_xi);
        r.add_scaled(act_word({{Sym::c, i}, {Sym::e, i}}, poly_times(P, X)), sp.t);
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            const CommPoly fs = signed_act(reflection(subst_type_, ReflectionKind::Plain, k, i), f);
            const CommPoly fb = signed_act(reflection(subst_type_, ReflectionKind::Barred, k, i), f);
            const CommPoly D1 = exact_divide(f - fs, x(i) - x(k));
            const CommPoly D2 = exact_divide(f - fb, x(i) + x(k));
            const Element ckci = A.mul(C(k), C(i));
            const Element plain = A.mul(one + A.mul(E(k), E(i)), A.group_element(reflection(ty, ReflectionKind::Plain, k, i)));
            const ModuleElement Y = act(plain, X);
            ModuleElement s = poly_times(D1, Y);
            if (ty.family == Family::A) {
                const std::vector<Gen> cc{{Sym::c, k}, {Sym::c, i}};
                s += divide_left(poly_times(f, act_word(cc, Y)) - act_word(cc, poly_times(fs, Y)), x(i) + x(k));
            } else {
                s += poly_times(D2, act(A.mul(ckci, plain), X));
            }
            r.add_scaled(s, -u_sum);
            if (ty.family == Family::A) continue;
            const Element barred =
                A.mul(one - A.mul(E(k), E(i)), A.group_element(reflection(ty, ReflectionKind::Barred, k, i)));
            r.add_scaled(poly_times(D2, act(barred, X)) - poly_times(D1, act(A.mul(ckci, barred), X)), -sp.u);
        }
        if (ty.family == Family::B)
            r.add_scaled(poly_times(P, act(A.group_element(reflection(ty, ReflectionKind::Tau, i)), X)), -*sp.v);
    }
    return r;
}

// eta_i (f (x) m) = t c_i (f - f^{tau_i})/(2x_i) (x) m
//   + u sum_k [ (f - f^{s_ki})/(x_i - x_k) + (f - f^{~s_ki})/(x_i + x_k) c_k c_i ] (x) [k,i] m
//   - u sum_k [ (f - f^{~s_ki})/(x_i + x_k) - (f - f^{s_ki})/(x_i - x_k) c_k c_i ] (x) ~[k,i] m
//   + v (f - f^{tau_i})/(2x_i) (x) ~[i] m
// with the same type conventions as for y_i.
ModuleElement VermaModule::dunkl_eta_sH(int i, const ModuleElement& v) const {
    if (alg_->family() != FamilyKind::sH) throw std::invalid_argument("dunkl_eta_sH needs family sH");
    const WeylType& ty = alg_->type();
    const int n = ty.n;
    const PBWAlgebra& A = *alg_;
    const AlgebraSpec& sp = A.spec();
    auto x = [&](int k) { return CommPoly::var(n, k); };
    auto spin = [&](SpinReflectionKind kind, int a, int b) { return A.spin_element(spin_reflection(ty, kind, a, b)); };
    const CommPoly two_xi = Scalar(2) * x(i);
    const Scalar u_sum = faults_.flip_reflection_sum ? -sp.u : sp.u;

    ModuleElement r;
    for (const auto& [m, f] : split<false>(v, n)) {
        const ModuleElement X = vacuum(m);
        const CommPoly P = exact_divide(f - signed_act(reflection(subst_type_, ReflectionKind::Tau, i), f), two_xi);
        r.add_scaled(act_gen({Sym::c, i}, poly_times(P, X)), sp.t);
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            const CommPoly fs = signed_act(reflection(subst_type_, ReflectionKind::Plain, k, i), f);
            const CommPoly fb = signed_act(reflection(subst_type_, ReflectionKind::Barred, k, i), f);
            const CommPoly D1 = exact_divide(f - fs, x(i) - x(k));
            const CommPoly D2 = exact_divide(f - fb, x(i) + x(k));
            const Element ckci = A.mul(A.gen({Sym::c, k}), A.gen({Sym::c, i}));
            const Element plain = spin(SpinReflectionKind::Plain, k, i);
            const ModuleElement Y = act(plain, X);
            ModuleElement s = poly_times(D1, Y);
            if (ty.family == Family::A) {
                const std::vector<Gen> cc{{Sym::c, k}, {Sym::c, i}};
                s += divide_left(poly_times(f, act_word(cc, Y)) - act_word(cc, poly_times(fs, Y)), x(i) + x(k));
            } else {
                s += poly_times(D2, act(A.mul(ckci, plain), X));
            }
            r.add_scaled(s, u_sum);
            if (ty.family == Family::A) continue;
            const Element barred = spin(SpinReflectionKind::Barred, k, i);
            r.add_scaled(poly_times(D2, act(barred, X)) - poly_times(D1, act(A.mul(ckci, barred), X)), -sp.u);
        }
        if (ty.family == Family::B)
            r.add_scaled(poly_times(P, act(spin(SpinReflectionKind::BarSingle, i, 0), X)), *sp.v);
    }
    return r;
}

// eta_i = t d_i + v (1 - tau_i)/(2 xi_i)
//         + kappa u sum_k 1/(xi_i^2 - xi_k^2) ((xi_i - xi_k) s_ik - (xi_i tau_i - xi_k tau_k))
// with kappa = 1 for type A and 2 for types B and D, the v term for type B
// only, and s_ik, tau_i acting as the signed substitutions f -> f^sigma.
ModuleElement VermaModule::dunkl_eta_oH(int i, const ModuleElement& v) const {
    if (alg_->family() != FamilyKind::oH) throw std::invalid_argument("dunkl_eta_oH needs family oH");
    if (!dynamic_cast<const TrivialCarrier*>(carrier_.get()))
        throw std::invalid_argument("dunkl_eta_oH needs the trivial carrier");
    const WeylType& ty = alg_->type();
    const int n = ty.n;
    const AlgebraSpec& sp = alg_->spec();
    auto xi = [&](int k) { return SkewPoly::var(n, k); };
    auto tau = [&](int k, const SkewPoly& f) { return signed_act(reflection(subst_type_, ReflectionKind::Tau, k), f); };
    const Scalar kappa_u = (ty.family == Family::A ? Scalar(1) : Scalar(2)) *
                           (faults_.flip_reflection_sum ? -sp.u : sp.u);

    ModuleElement r;
    for (const auto& [m, f] : split<true>(v, n)) {
        SkewPoly out = sp.t * super_derive(i, f);
        if (faults_.even_derivation) {
            out = SkewPoly(n);
            for (const auto& [a, s] : f.terms()) {
                if (!(a[i - 1] & 1)) continue;
                Exps b = a;
                --b[i - 1];
                out.add(b, sp.t * s);
            }
        }
        if (ty.family == Family::B) out = out + *sp.v * exact_divide(f - tau(i, f), Scalar(2) * xi(i));
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            const SkewPoly fs = signed_act(reflection(subst_type_, ReflectionKind::Plain, i, k), f);
            const SkewPoly num = (xi(i) - xi(k)) * fs - (xi(i) * tau(i, f) - xi(k) * tau(k, f));
            out = out + kappa_u * exact_divide(num, xi(i) * xi(i) - xi(k) * xi(k));
        }
        for (const auto& [a, s] : out.terms()) r.add({a, m}, s);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Dunkl operators through the defining brackets

ModuleElement VermaModule::recursive_term(int i, const ModuleKey& key) const {
    int j = 0;
    for (int k = 0; k < kMaxRank; ++k)
        if (key.a[k]) {
            j = k + 1;
            break;
        }
    if (j == 0) return {};
    Exps rest = key.a;
    --rest[j - 1];
    const ModuleKey inner{rest, key.m};
    // l_j is the first letter of l^a, so l^a = l_j l^rest with no sign
    ModuleElement r = act(alg_->relation(i, j), ModuleElement::basis(rest, key.m));
    const ModuleElement tail = act_gen({poly_sym(), j}, recursive_term(i, inner));
    r.add_scaled(tail, Scalar(skew() ? -1 : 1));
    return r;
}

ModuleElement VermaModule::dunkl_recursive(int i, const ModuleElement& v) const {
    if (i < 1 || i > alg_->type().n) throw std::out_of_range("Dunkl operator index out of range");
    ModuleElement r;
    for (const auto& [k, c] : v.terms()) r.add_scaled(recursive_term(i, k), c);
    return r;
}

// ---------------------------------------------------------------------------
// Rendering

std::string VermaModule::str(const ModuleElement& v) const {
    if (v.is_zero()) return "0";
    const std::string var = skew() ? "xi" : "x";
    const bool trivial = dynamic_cast<const TrivialCarrier*>(carrier_.get()) != nullptr;
    std::string out;
    bool first = true;
    for (const auto& [k, c] : v.terms()) {
        std::string mono = exps_str(k.a, var);
        if (!trivial) mono = (mono.empty() ? "1" : mono) + " (x) " + carrier_->basis_str(k.m);
        out += render_term(c, mono, first);
        first = false;
    }
    return out;
}

nlohmann::json VermaModule::to_json(const ModuleElement& v) const {
    nlohmann::json terms = nlohmann::json::array();
    const int n = alg_->type().n;
    for (const auto& [k, c] : v.terms()) {
        nlohmann::json t{{"coeff", scalar_json(c)}, {"poly", exps_json(k.a, n)}};
        const nlohmann::json cj = carrier_->basis_json(k.m);
        if (!cj.is_null()) t["carrier"] = cj;
        terms.push_back(std::move(t));
    }
    return {{"module", alg_->name() + " on " + carrier_->name()},
            {"family", alg_->family_label()},
            {"type", std::string(1, family_char(alg_->type().family))},
            {"rank", n},
            {"terms", terms}};
}

template ModuleElement VermaModule::poly_times(const Poly<true>&, const ModuleElement&) const;
template ModuleElement VermaModule::poly_times(const Poly<false>&, const ModuleElement&) const;

// ---------------------------------------------------------------------------
// Checks on the module

std::vector<OperatorRelationResult> relation_faithfulness(const VermaModule& mod, int degree) {
    std::vector<OperatorRelationResult> out;
    const std::vector<ModuleKey> keys = mod.basis(degree);
    for (const Relation& rel : defining_relations(mod.algebra())) {
        OperatorRelationResult res;
        res.label = rel.label;
        for (const ModuleKey& k : keys) {
            const ModuleElement v = ModuleElement::basis(k.a, k.m);
            ModuleElement d = mod.act(rel.lhs, v) - mod.act(rel.rhs, v);
            if (!d.is_zero()) {
                res.pass = false;
                res.witness = k;
                res.residual = std::move(d);
                break;
            }
        }
        out.push_back(std::move(res));
    }
    return out;
}

std::vector<OperatorRelationResult> carrier_compatibility(const VermaModule& mod) {
    auto in_k = [&](const FreeExpr& e) {
        for (const FreeTerm& t : e)
            for (const Gen& g : t.word)
                if (g.sym == mod.poly_sym() || g.sym == mod.dunkl_sym()) return false;
        return true;
    };
    std::vector<OperatorRelationResult> out;
    for (const Relation& rel : defining_relations(mod.algebra())) {
        if (!in_k(rel.lhs) || !in_k(rel.rhs)) continue;
        OperatorRelationResult res;
        res.label = rel.label;
        for (std::uint16_t b : mod.carrier().basis()) {
            ModuleElement d = mod.act(rel.lhs, mod.vacuum(b)) - mod.act(rel.rhs, mod.vacuum(b));
            if (!d.is_zero()) {
                res.pass = false;
                res.witness = ModuleKey{Exps{}, b};
                res.residual = std::move(d);
                break;
            }
        }
        out.push_back(std::move(res));
    }
    return out;
}

std::vector<AnticommuteFailure> anticommute_failures(const VermaModule& mod, int degree) {
    std::vector<AnticommuteFailure> out;
    const int n = mod.algebra().type().n;
    const Scalar sign(mod.algebra().family() == FamilyKind::H ? -1 : 1);
    for (const ModuleKey& k : mod.basis(degree)) {
        const ModuleElement v = ModuleElement::basis(k.a, k.m);
        std::vector<ModuleElement> d(n + 1);
        for (int i = 1; i <= n; ++i) d[i] = mod.dunkl(i, v);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                ModuleElement res = mod.dunkl(i, d[j]);
                res.add_scaled(mod.dunkl(j, d[i]), sign);
                if (!res.is_zero()) out.push_back({i, j, k, std::move(res)});
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Affine Hecke subalgebra and center

Element z_element(const PBWAlgebra& alg, int i) {
    if (alg.family() != FamilyKind::oH || alg.type().family != Family::A)
        throw std::invalid_argument("z_i is defined in oH of type A");
    Element z = -alg.mul(alg.gen({Sym::xi, i}), alg.gen({Sym::eta, i}));
    z.add_scaled(jucys_murphy(alg, i), alg.spec().u);
    return z;
}

Element jucys_murphy(const Algebra& alg, int i) {
    const WeylType& ty = alg.type();
    if (i < 1 || i > ty.n) throw std::out_of_range("Jucys-Murphy index out of range");
    Element r;
    for (int k = 1; k < i; ++k) r += alg.group_element(reflection(ty, ReflectionKind::Plain, k, i));
    return r;
}

CentralResult is_central(const Algebra& alg, const Element& a) {
    if (!a.is_zero() && alg.parity(a) != 0) throw std::invalid_argument("is_central needs an even element");
    CentralResult res;
    for (const Gen& g : alg.generators()) {
        Element c = alg.commutator(a, alg.gen(g));
        if (!c.is_zero()) {
            res.central = false;
            res.witness = g;
            res.commutator = std::move(c);
            return res;
        }
    }
    return res;
}

Element elementary_in_squares(const Algebra& alg, Sym sym, int k) {
    const int n = alg.type().n;
    if (k < 0 || k > n) throw std::out_of_range("elementary symmetric degree out of range");
    std::vector<Element> sq;
    for (int i = 1; i <= n; ++i) sq.push_back(alg.pow(alg.gen({sym, i}), 2));
    Element r;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        Element p = alg.one();
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) p = alg.mul(p, sq[i]);
        r += p;
    }
    return r;
}

}  // namespace daha
