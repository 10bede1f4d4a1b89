#include "daha/pbw.hpp"

#include <stdexcept>

namespace daha {

namespace {

// Sign of the barred-reflection sum in the diagonal bracket of H (types B,
// D) and of sH. Both are fixed by requiring the rewriting to be associative.
constexpr int kHBarredDiagonalSign = -1;
constexpr int kSBarredDiagonalSign = -1;

Exps unit_exps(int j, int power = 1) {
    Exps a{};
    a[j - 1] = static_cast<std::uint8_t>(power);
    return a;
}

Exps add_exps(const Exps& a, const Exps& b) {
    Exps c;
    for (int k = 0; k < kMaxRank; ++k) {
        int s = a[k] + b[k];
        if (s > 255) throw std::overflow_error("exponent overflow");
        c[k] = static_cast<std::uint8_t>(s);
    }
    return c;
}

bool is_zero_exps(const Exps& a) {
    for (auto x : a)
        if (x) return false;
    return true;
}

int sum_masked_exps(CliffordMono bits, const Exps& a) {
    int s = 0;
    for (int k = 0; k < 8 && k < kMaxRank; ++k)
        if (bits & (1u << k)) s += a[k];
    return s;
}

}  // namespace

std::string family_name(FamilyKind f) {
    switch (f) {
        case FamilyKind::H: return "H";
        case FamilyKind::sH: return "sH";
        case FamilyKind::oH: return "oH";
    }
    return "?";
}

FamilyKind family_kind_from_name(const std::string& s) {
    if (s == "H" || s == "h") return FamilyKind::H;
    if (s == "sH" || s == "sh" || s == "SH") return FamilyKind::sH;
    if (s == "oH" || s == "oh" || s == "OH") return FamilyKind::oH;
    throw std::invalid_argument("unknown algebra family '" + s + "'");
}

AlgebraSpec AlgebraSpec::formal(FamilyKind f, const WeylType& ty) {
    AlgebraSpec s;
    s.family = f;
    s.type = ty;
    if (ty.family == Family::B) s.v = Scalar::v();
    return s;
}

void AlgebraSpec::validate() const {
    if ((type.family == Family::B) != v.has_value())
        throw std::invalid_argument("parameter v must be present exactly for type B");
}

std::string AlgebraSpec::str() const {
    std::string s = family_name(family) + "(" + type.str() + "; t=" + t.str() + ", u=" + u.str();
    if (v) s += ", v=" + v->str();
    return s + ")";
}

PBWAlgebra::PBWAlgebra(AlgebraSpec spec)
    : spec_(std::move(spec)), sw_(&SpinWeyl::get(spec_.type)), id_code_(GroupElement::identity_code(spec_.type.n)) {
    spec_.validate();
    build_relations();
}

std::string PBWAlgebra::name() const { return family_name(spec_.family) + "(" + spec_.type.str() + ")"; }

Mono PBWAlgebra::unit_mono() const {
    Mono m;
    m.g = id_code_;
    return m;
}

Sym PBWAlgebra::left_sym() const {
    switch (spec_.family) {
        case FamilyKind::H: return Sym::x;
        case FamilyKind::sH: return Sym::eta;
        case FamilyKind::oH: return Sym::xi;
    }
    return Sym::x;
}

Sym PBWAlgebra::right_sym() const {
    switch (spec_.family) {
        case FamilyKind::H: return Sym::y;
        case FamilyKind::sH: return Sym::x;
        case FamilyKind::oH: return Sym::eta;
    }
    return Sym::y;
}

Sym PBWAlgebra::group_sym() const { return spec_.family == FamilyKind::sH ? Sym::t : Sym::s; }

std::vector<Gen> PBWAlgebra::generators() const {
    std::vector<Gen> out;
    const int n = spec_.type.n;
    for (int k = 1; k <= n; ++k) out.push_back({left_sym(), k});
    for (int k = 1; k <= n; ++k) out.push_back({right_sym(), k});
    if (spec_.family != FamilyKind::oH)
        for (int k = 1; k <= n; ++k) out.push_back({Sym::c, k});
    if (spec_.family == FamilyKind::H)
        for (int k = 1; k <= n; ++k) out.push_back({Sym::e, k});
    for (int k = 1; k <= spec_.type.num_generators(); ++k) out.push_back({group_sym(), k});
    return out;
}

Element PBWAlgebra::gen(const Gen& g) const {
    const int n = spec_.type.n;
    Mono m = unit_mono();
    const bool index_ok = g.i >= 1 && g.i <= n;
    if (g.sym == left_sym() && index_ok) {
        m.L = unit_exps(g.i);
        return Element::mono(m);
    }
    if (g.sym == right_sym() && index_ok) {
        m.R = unit_exps(g.i);
        return Element::mono(m);
    }
    if (g.sym == Sym::c && index_ok && spec_.family != FamilyKind::oH) {
        m.cl = c_bit(g.i);
        return Element::mono(m);
    }
    if (g.sym == Sym::e && index_ok && spec_.family == FamilyKind::H) {
        m.cl = e_bit(g.i);
        return Element::mono(m);
    }
    if (g.sym == group_sym() && g.i >= 1 && g.i <= spec_.type.num_generators()) {
        m.g = generator(spec_.type, g.i).code();
        return Element::mono(m);
    }
    throw std::invalid_argument("generator " + gen_name(g) + " not in " + name());
}

int PBWAlgebra::gen_parity(const Gen& g) const {
    switch (g.sym) {
        case Sym::c:
        case Sym::e:
        case Sym::xi:
        case Sym::eta:
        case Sym::t:
            return 1;
        default:
            return 0;
    }
}

int PBWAlgebra::parity(const Mono& m) const {
    switch (spec_.family) {
        case FamilyKind::H: return daha::parity(m.cl);
        case FamilyKind::sH: return (total_degree(m.L) + daha::parity(m.cl) + sw_->length(m.g)) & 1;
        case FamilyKind::oH: return (total_degree(m.L) + total_degree(m.R)) & 1;
    }
    return 0;
}

Element PBWAlgebra::group_element(const GroupElement& w) const {
    if (spec_.family == FamilyKind::sH) throw std::invalid_argument(name() + " has no plain group elements");
    if (!(w.type() == spec_.type)) throw std::invalid_argument("group element of the wrong type");
    Mono m = unit_mono();
    m.g = w.code();
    return Element::mono(m);
}

Element PBWAlgebra::spin_element(const SpinElement& s) const {
    if (spec_.family != FamilyKind::sH) throw std::invalid_argument(name() + " has no spin group elements");
    if (!(s.type() == spec_.type)) throw std::invalid_argument("spin element of the wrong type");
    Element r;
    for (const auto& [w, c] : s.terms()) {
        Mono m = unit_mono();
        m.g = w;
        r.add(m, c);
    }
    return r;
}

Element PBWAlgebra::left_poly(const Exps& a, const Scalar& s) const {
    Mono m = unit_mono();
    m.L = a;
    return Element::mono(m, s);
}

// ---------------------------------------------------------------------------
// Defining relations

void PBWAlgebra::build_relations() {
    const WeylType& ty = spec_.type;
    const int n = ty.n;
    const bool bd = ty.family != Family::A;
    const bool b = ty.family == Family::B;
    const Element one = this->one();
    auto C = [&](int k) { return gen({Sym::c, k}); };
    auto E = [&](int k) { return gen({Sym::e, k}); };
    auto plain = [&](int i, int j) { return group_element(reflection(ty, ReflectionKind::Plain, i, j)); };
    auto barred = [&](int i, int j) { return group_element(reflection(ty, ReflectionKind::Barred, i, j)); };
    auto spin = [&](SpinReflectionKind k, int i, int j) { return spin_element(spin_reflection(ty, k, i, j)); };
    const Scalar& t = spec_.t;
    const Scalar& u = spec_.u;

    rel_.assign(n + 1, std::vector<Element>(n + 1));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Element r;
            switch (spec_.family) {
                case FamilyKind::H:
                    if (i != j) {
                        r += u * mul({one + mul(C(i), C(j)), one + mul(E(j), E(i)), plain(i, j)});
                        if (bd) r -= u * mul({one - mul(C(i), C(j)), one - mul(E(j), E(i)), barred(i, j)});
                    } else {
                        r += t * mul(C(i), E(i));
                        for (int k = 1; k <= n; ++k) {
                            if (k == i) continue;
                            r -= u * mul({one + mul(C(k), C(i)), one + mul(E(k), E(i)), plain(k, i)});
                            if (bd)
                                r += Scalar(kHBarredDiagonalSign) * u *
                                     mul({one - mul(C(k), C(i)), one - mul(E(k), E(i)), barred(k, i)});
                        }
                        if (b) r -= *spec_.v * group_element(reflection(ty, ReflectionKind::Tau, i));
                    }
                    break;
                case FamilyKind::sH:
                    if (i != j) {
                        r += u * mul(one + mul(C(i), C(j)), spin(SpinReflectionKind::Plain, i, j));
                        if (bd) r -= u * mul(one - mul(C(i), C(j)), spin(SpinReflectionKind::Barred, i, j));
                    } else {
                        r += t * C(i);
                        for (int k = 1; k <= n; ++k) {
                            if (k == i) continue;
                            r += u * mul(one + mul(C(k), C(i)), spin(SpinReflectionKind::Plain, k, i));
                            if (bd)
                                r += Scalar(kSBarredDiagonalSign) * u *
                                     mul(one - mul(C(k), C(i)), spin(SpinReflectionKind::Barred, k, i));
                        }
                        if (b) r += *spec_.v * spin(SpinReflectionKind::BarSingle, i, 0);
                    }
                    break;
                case FamilyKind::oH:
                    if (i != j) {
                        r += u * plain(i, j);
                        if (bd) r += u * barred(i, j);
                    } else {
                        r += t * one;
                        for (int k = 1; k <= n; ++k) {
                            if (k == i) continue;
                            r += u * plain(k, i);
                            if (bd) r += u * barred(k, i);
                        }
                        if (b) r += *spec_.v * group_element(reflection(ty, ReflectionKind::Tau, i));
                    }
                    break;
            }
            rel_[i][j] = std::move(r);
        }
    }

    swap_.assign(n + 1, std::vector<KList>(n + 1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            // H: y_i x_j = x_j y_i + [y_i, x_j]
            // sH: x_i eta_j = eta_j x_i - [eta_j, x_i]
            // oH: eta_i xi_j = -xi_j eta_i + [eta_i, xi_j]_+
            Element a = spec_.family == FamilyKind::sH ? -rel_[j][i] : rel_[i][j];
            if (spec_.faults.flip_bracket && i == 1 && j == (n >= 2 ? 2 : 1)) a = -a;
            swap_[i][j] = to_klist(a);
        }
}

PBWAlgebra::KList PBWAlgebra::to_klist(const Element& e) const {
    KList out;
    out.reserve(e.size());
    for (const auto& [m, s] : e.terms()) {
        if (!is_zero_exps(m.R)) throw std::logic_error("bracket term has a right-block factor");
        out.push_back({s, m.L, m.cl, m.g});
    }
    return out;
}

const Element& PBWAlgebra::relation(int i, int j) const {
    if (i < 1 || j < 1 || i > spec_.type.n || j > spec_.type.n) throw std::out_of_range("relation index out of range");
    return rel_[i][j];
}

// ---------------------------------------------------------------------------
// Family primitives

std::pair<int, Mono> PBWAlgebra::k_mul(CliffordMono cl1, std::uint32_t g1, CliffordMono cl2, std::uint32_t g2) const {
    const WeylType& ty = spec_.type;
    Mono out;
    int sign = 1;
    const GroupElement G1 = GroupElement::from_code_unchecked(ty, g1);
    const GroupElement G2 = GroupElement::from_code_unchecked(ty, g2);
    out.g = compose(G1, G2).code();
    switch (spec_.family) {
        case FamilyKind::H: {
            // (c^d g e^d')(c^f w e^f') = (-1)^{|d'||f|} c^d (c^f)^g gw (e^d')^{w^-1} e^f'
            const CliffordMono d = cl1 & kCMask, dp = cl1 & kEMask, f = cl2 & kCMask, fp = cl2 & kEMask;
            if (daha::parity(dp) & daha::parity(f)) sign = -sign;
            auto [s1, fa] = weyl_act(G1, f);
            auto [s2, eb] = weyl_act(inverse(G2), dp);
            auto [s3, cc] = mono_mul(d, fa);
            auto [s4, ee] = mono_mul(eb, fp);
            sign *= s1 * s2 * s3 * s4;
            out.cl = CliffordMono(cc | ee);
            break;
        }
        case FamilyKind::sH: {
            // (c^d s_g)(c^f s_w) = (-1)^{l(g)|f|} c^d (c^f)^g phi(g,w) s_gw
            if ((sw_->length(g1) & 1) && daha::parity(cl2)) sign = -sign;
            auto [s1, fa] = weyl_act(G1, cl2);
            auto [s2, cc] = mono_mul(cl1, fa);
            sign *= s1 * s2 * sw_->cocycle(g1, g2);
            out.cl = cc;
            break;
        }
        case FamilyKind::oH:
            break;
    }
    return {sign, out};
}

std::pair<int, Exps> PBWAlgebra::k_act_left(CliffordMono cl, std::uint32_t g, const Exps& a) const {
    if (is_zero_exps(a)) return {1, a};
    const GroupElement G = GroupElement::from_code_unchecked(spec_.type, g);
    switch (spec_.family) {
        case FamilyKind::H: {
            // c^d g e^d' x^a = c^d (x^a)^g g e^d', then c_k x_k = -x_k c_k
            auto [sg, b] = act_exps(G, a, false, true);
            if (sum_masked_exps(cl & kCMask, b) & 1) sg = -sg;
            return {sg, b};
        }
        case FamilyKind::sH: {
            // s_g eta_j s_g^-1 = (-1)^{l(g)} eta_{g*(j)}; c's anticommute with eta's
            auto [sg, b] = act_exps(G, a, true, false);
            const int deg = total_degree(a);
            if ((sw_->length(g) & 1) && (deg & 1)) sg = -sg;
            if (daha::parity(cl) && (deg & 1)) sg = -sg;
            return {sg, b};
        }
        case FamilyKind::oH:
            return act_exps(G, a, true, false);
    }
    return {1, a};
}

std::pair<int, int> PBWAlgebra::pass_k(int i, CliffordMono cl, std::uint32_t g) const {
    const GroupElement Ginv = inverse(GroupElement::from_code_unchecked(spec_.type, g));
    const int k = Ginv.act_index(i);
    const int j = k < 0 ? -k : k;
    switch (spec_.family) {
        case FamilyKind::H: {
            // y_i g = g y_i^{g^-1}, then y_j e_j = -e_j y_j
            int sign = k < 0 ? -1 : 1;
            if (cl & e_bit(j)) sign = -sign;
            return {sign, j};
        }
        case FamilyKind::sH: {
            // x_i c_i = -c_i x_i, then x_i s_g = s_g x_i^{g^-1}
            int sign = (cl & c_bit(i)) ? -1 : 1;
            if (k < 0) sign = -sign;
            return {sign, j};
        }
        case FamilyKind::oH:
            return {1, j};
    }
    return {1, j};
}

std::pair<int, Exps> PBWAlgebra::right_mul(int j, const Exps& r) const {
    const Exps ej = unit_exps(j);
    const int sign = spec_.family == FamilyKind::oH ? skew_mul_sign(ej, r) : 1;
    return {sign, add_exps(ej, r)};
}

std::pair<int, Exps> PBWAlgebra::left_mul(const Exps& a, const Exps& b) const {
    const int sign = spec_.family == FamilyKind::H ? 1 : skew_mul_sign(a, b);
    return {sign, add_exps(a, b)};
}

int PBWAlgebra::left_sign(const Exps& a) const {
    if (spec_.family != FamilyKind::oH) return 1;
    return (total_degree(a) & 1) ? -1 : 1;
}

// ---------------------------------------------------------------------------
// Brackets of r_i with left monomials

const PBWAlgebra::KList& PBWAlgebra::bracket(int i, const Exps& L) const {
    std::uint64_t key = static_cast<std::uint64_t>(i);
    for (int k = 0; k < kMaxRank; ++k) key = (key << 8) | L[k];
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    KList value = compute_bracket(i, L);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.try_emplace(key, std::move(value)).first->second;
}

void PBWAlgebra::append_times_left(KList& out, const KList& x, const Exps& rest, int sign) const {
    for (const auto& kt : x) {
        auto [s1, moved] = k_act_left(kt.cl, kt.g, rest);
        auto [s2, L] = left_mul(kt.L, moved);
        out.push_back({kt.c.negated_if(sign * s1 * s2 < 0), L, kt.cl, kt.g});
    }
}

PBWAlgebra::KList PBWAlgebra::compute_bracket(int i, const Exps& L) const {
    int j = 0;
    for (int k = 0; k < kMaxRank; ++k)
        if (L[k]) {
            j = k + 1;
            break;
        }
    if (j == 0) return {};
    const int eps = spec_.family == FamilyKind::oH ? -1 : 1;
    const bool closed =
        spec_.mode == BracketMode::ClosedForm && spec_.family != FamilyKind::sH && L[j - 1] > 1;

    KList raw;
    Exps head{}, rest = L;
    KList head_bracket;
    if (closed) {
        // r_i l_j^p = eps^p l_j^p r_i + CF(i, j, p)
        const int p = L[j - 1];
        head = unit_exps(j, p);
        rest[j - 1] = 0;
        if (is_zero_exps(rest)) return to_klist(closed_form(i, j, p));
        head_bracket = bracket(i, head);
    } else {
        // r_i l_j = eps l_j r_i + A(i, j)
        head = unit_exps(j);
        rest[j - 1]--;
        head_bracket = swap_[i][j];
    }
    const int head_sign = (eps < 0 && (total_degree(head) & 1)) ? -1 : 1;
    // r_i l^head l^rest = eps^head l^head (eps^rest l^rest r_i + B(i, rest)) + B(i, head) l^rest
    for (const auto& kt : bracket(i, rest)) {
        auto [sg, L2] = left_mul(head, kt.L);
        raw.push_back({kt.c.negated_if(sg * head_sign < 0), L2, kt.cl, kt.g});
    }
    append_times_left(raw, head_bracket, rest, 1);

    Element merged;
    for (const auto& kt : raw) {
        Mono m;
        m.L = kt.L;
        m.cl = kt.cl;
        m.g = kt.g;
        merged.add(m, kt.c);
    }
    return to_klist(merged);
}

// ---------------------------------------------------------------------------
// Multiplication

Element PBWAlgebra::apply_right(int i, const Element& b) const {
    Element r;
    for (const auto& [m, s] : b.terms()) {
        auto [sg, j] = pass_k(i, m.cl, m.g);
        auto [sg2, R2] = right_mul(j, m.R);
        Mono moved = m;
        moved.R = R2;
        r.add(moved, s.negated_if(left_sign(m.L) * sg * sg2 < 0));
        for (const auto& kt : bracket(i, m.L)) {
            auto [sgk, km] = k_mul(kt.cl, kt.g, m.cl, m.g);
            Mono out;
            out.L = kt.L;
            out.cl = km.cl;
            out.g = km.g;
            out.R = m.R;
            r.add(out, (s * kt.c).negated_if(sgk < 0));
        }
    }
    return r;
}

Element PBWAlgebra::apply_k(CliffordMono cl, std::uint32_t g, const Element& b) const {
    Element r;
    for (const auto& [m, s] : b.terms()) {
        auto [s1, L] = k_act_left(cl, g, m.L);
        auto [s2, km] = k_mul(cl, g, m.cl, m.g);
        Mono out;
        out.L = L;
        out.cl = km.cl;
        out.g = km.g;
        out.R = m.R;
        r.add(out, s.negated_if(s1 * s2 < 0));
    }
    return r;
}

Element PBWAlgebra::apply_left(const Exps& a, const Element& b) const {
    Element r;
    for (const auto& [m, s] : b.terms()) {
        auto [sg, L] = left_mul(a, m.L);
        Mono out = m;
        out.L = L;
        r.add(out, s.negated_if(sg < 0));
    }
    return r;
}

Element PBWAlgebra::mul_mono(const Mono& a, const Element& b) const {
    Element cur = b;
    for (int i = spec_.type.n; i >= 1; --i)
        for (int k = 0; k < a.R[i - 1]; ++k) cur = apply_right(i, cur);
    if (a.cl != 0 || a.g != id_code_) cur = apply_k(a.cl, a.g, cur);
    if (!is_zero_exps(a.L)) cur = apply_left(a.L, cur);
    return cur;
}

// ---------------------------------------------------------------------------
// Closed forms

Element PBWAlgebra::closed_form(int i, int j, int l) const {
    const WeylType& ty = spec_.type;
    const int n = ty.n;
    if (i < 1 || j < 1 || i > n || j > n || l < 0) throw std::out_of_range("closed_form: bad index");
    const bool bd = ty.family != Family::A;
    const bool b = ty.family == Family::B;
    const Element one = this->one();
    auto plain = [&](int p, int q) { return group_element(reflection(ty, ReflectionKind::Plain, p, q)); };
    auto barred = [&](int p, int q) { return group_element(reflection(ty, ReflectionKind::Barred, p, q)); };
    const Scalar& t = spec_.t;
    const Scalar& u = spec_.u;
    const Scalar sgn_l = (l & 1) ? Scalar(-1) : Scalar(1);
    Element r;

    switch (spec_.family) {
        case FamilyKind::sH:
            throw std::logic_error("no closed-form bracket for sH");
        case FamilyKind::H: {
            auto C = [&](int k) { return gen({Sym::c, k}); };
            auto E = [&](int k) { return gen({Sym::e, k}); };
            auto X = [&](int k, int p = 1) { return CommPoly::var(n, k, p); };
            auto P = [&](const CommPoly& p) { return left_poly(p); };
            if (i != j) {
                const CommPoly hm = exact_divide(X(j, l) - X(i, l), X(j) - X(i));
                const CommPoly hp = exact_divide(X(j, l) - sgn_l * X(i, l), X(j) + X(i));
                r += u * mul({P(hm) + mul({P(hp), C(i), C(j)}), one - mul(E(i), E(j)), plain(i, j)});
                if (bd) r -= u * mul({P(hp) - mul({P(hm), C(i), C(j)}), one + mul(E(i), E(j)), barred(i, j)});
            } else {
                const CommPoly d = exact_divide(X(i, l) - sgn_l * X(i, l), Scalar(2) * X(i));
                r += t * mul({C(i), E(i), P(d)});
                for (int k = 1; k <= n; ++k) {
                    if (k == i) continue;
                    const CommPoly hm = exact_divide(X(i, l) - X(k, l), X(i) - X(k));
                    const CommPoly hp = exact_divide(X(i, l) - sgn_l * X(k, l), X(i) + X(k));
                    r -= u * mul({P(hm) + mul({P(hp), C(k), C(i)}), one + mul(E(k), E(i)), plain(k, i)});
                    if (bd)
                        r += Scalar(kHBarredDiagonalSign) * u *
                             mul({P(hp) - mul({P(hm), C(k), C(i)}), one - mul(E(k), E(i)), barred(k, i)});
                }
                if (b) r -= *spec_.v * mul(P(d), group_element(reflection(ty, ReflectionKind::Tau, i)));
            }
            break;
        }
        case FamilyKind::oH: {
            auto Xi = [&](int k, int p = 1) { return SkewPoly::var(n, k, p); };
            auto P = [&](const SkewPoly& p) { return left_poly(p); };
            auto refl = [&](int p, int q) { return bd ? plain(p, q) + barred(p, q) : plain(p, q); };
            if (i != j) {
                const SkewPoly num = Xi(i, l + 1) - Xi(j) * Xi(i, l) - Xi(i) * Xi(j, l) + sgn_l * Xi(j, l + 1);
                const SkewPoly q = exact_divide(num, Xi(i, 2) - Xi(j, 2));
                r += u * mul(P(q), refl(i, j));
            } else {
                const SkewPoly d = exact_divide(Xi(i, l) - sgn_l * Xi(i, l), Scalar(2) * Xi(i));
                r += t * P(d);
                if (b) r += *spec_.v * mul(P(d), group_element(reflection(ty, ReflectionKind::Tau, i)));
                for (int k = 1; k <= n; ++k) {
                    if (k == i) continue;
                    const SkewPoly num = Xi(i) * Xi(k, l) - Xi(k, l + 1) - sgn_l * Xi(i, l + 1) + Xi(k) * Xi(i, l);
                    const SkewPoly p = exact_divide(num, Xi(i, 2) - Xi(k, 2));
                    r += u * mul(P(p), refl(i, k));
                }
            }
            break;
        }
    }
    if (spec_.faults.corrupt_closed_form && l == 3) r = -r;
    return r;
}

// ---------------------------------------------------------------------------
// Factorization, rendering, varpi

std::vector<Gen> PBWAlgebra::factor(const Mono& m) const {
    std::vector<Gen> out;
    const int n = spec_.type.n;
    auto block = [&](const Exps& a, Sym s) {
        for (int k = 1; k <= n; ++k)
            for (int p = 0; p < a[k - 1]; ++p) out.push_back({s, k});
    };
    block(m.L, left_sym());
    for (int k = 1; k <= n; ++k)
        if (m.cl & c_bit(k)) out.push_back({Sym::c, k});
    if (spec_.family == FamilyKind::H) {
        for (int a : sw_->lift(m.g)) out.push_back({Sym::s, a});
        for (int k = 1; k <= n; ++k)
            if (m.cl & e_bit(k)) out.push_back({Sym::e, k});
    } else {
        for (int a : sw_->lift(m.g)) out.push_back({group_sym(), a});
    }
    block(m.R, right_sym());
    return out;
}

std::string PBWAlgebra::group_part_str(std::uint32_t g) const {
    return spec_.family == FamilyKind::sH ? spin_str(spec_.type, g) : group_str(spec_.type, g);
}

std::string PBWAlgebra::mono_str(const Mono& m) const {
    const std::string cs = (m.cl & kCMask) ? daha::mono_str(m.cl & kCMask) : "";
    const std::string es = (m.cl & kEMask) ? daha::mono_str(m.cl & kEMask) : "";
    switch (spec_.family) {
        case FamilyKind::H:
            return join_factors({exps_str(m.L, "x"), cs, group_part_str(m.g), es, exps_str(m.R, "y")});
        case FamilyKind::sH:
            return join_factors({exps_str(m.L, "eta"), cs, group_part_str(m.g), exps_str(m.R, "x")});
        case FamilyKind::oH:
            return join_factors({exps_str(m.L, "xi"), group_part_str(m.g), exps_str(m.R, "eta")});
    }
    return "";
}

nlohmann::json PBWAlgebra::mono_json(const Mono& m) const {
    const int n = spec_.type.n;
    const std::string w = GroupElement::from_code_unchecked(spec_.type, m.g).str();
    nlohmann::json j;
    switch (spec_.family) {
        case FamilyKind::H:
            j["x"] = exps_json(m.L, n);
            j["c"] = bits_json(m.cl, 0, n);
            j["w"] = w;
            j["e"] = bits_json(m.cl, 8, n);
            j["y"] = exps_json(m.R, n);
            break;
        case FamilyKind::sH:
            j["eta"] = exps_json(m.L, n);
            j["c"] = bits_json(m.cl, 0, n);
            j["w"] = w;
            j["x"] = exps_json(m.R, n);
            break;
        case FamilyKind::oH:
            j["xi"] = exps_json(m.L, n);
            j["w"] = w;
            j["eta"] = exps_json(m.R, n);
            break;
    }
    return j;
}

Element PBWAlgebra::varpi(const Element& a) const {
    if (spec_.family != FamilyKind::H) throw std::invalid_argument("varpi is defined on H only");
    Element r;
    for (const auto& [m, s] : a.terms()) {
        Element img = one();
        for (const Gen& g : factor(m)) {
            Element gi;
            switch (g.sym) {
                case Sym::x: gi = gen({Sym::y, g.i}); break;
                case Sym::y: gi = -gen({Sym::x, g.i}); break;
                case Sym::c: gi = gen({Sym::e, g.i}); break;
                case Sym::e: gi = -gen({Sym::c, g.i}); break;
                default: gi = gen(g); break;
            }
            img = mul(img, gi);
        }
        r.add_scaled(img, s);
    }
    return r;
}

}  // namespace daha
