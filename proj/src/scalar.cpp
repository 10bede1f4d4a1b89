#include "daha/scalar.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace daha {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 x) {
    if (x > INT64_MAX || x < -INT64_MAX)
        throw std::overflow_error("QExt: coefficient exceeds 64-bit range");
    return static_cast<std::int64_t>(x);
}

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

QExt reduce(i128 a, i128 b, i128 c, i128 d, i128 den) {
    if (den == 0) throw std::domain_error("QExt: zero denominator");
    if (den < 0) { a = -a; b = -b; c = -c; d = -d; den = -den; }
    if (a == 0 && b == 0 && c == 0 && d == 0) return QExt();
    i128 g = gcd128(gcd128(gcd128(a, b), gcd128(c, d)), den);
    if (g > 1) { a /= g; b /= g; c /= g; d /= g; den /= g; }
    return QExt(narrow(a), narrow(b), narrow(c), narrow(d), narrow(den));
}

std::string rational_str(std::int64_t num, std::int64_t den) {
    std::int64_t g = std::gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

QExt::QExt(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t den)
    : a_(a), b_(b), c_(c), d_(d), den_(den) {
    if (den == 0) throw std::domain_error("QExt: zero denominator");
    std::int64_t g = std::gcd(std::gcd(std::gcd(a, b), std::gcd(c, d)), den);
    if (den < 0) g = -g;
    if (g != 1 && g != 0) { a_ /= g; b_ /= g; c_ /= g; d_ /= g; den_ /= g; }
    if (is_zero()) den_ = 1;
}

QExt QExt::rational(std::int64_t num, std::int64_t den) { return QExt(num, 0, 0, 0, den); }

QExt operator+(const QExt& x, const QExt& y) {
    if (x.den_ == y.den_)
        return reduce(i128(x.a_) + y.a_, i128(x.b_) + y.b_, i128(x.c_) + y.c_,
                      i128(x.d_) + y.d_, x.den_);
    i128 p = x.den_, q = y.den_;
    return reduce(x.a_ * q + y.a_ * p, x.b_ * q + y.b_ * p, x.c_ * q + y.c_ * p,
                  x.d_ * q + y.d_ * p, p * q);
}

QExt operator*(const QExt& x, const QExt& y) {
    i128 a1 = x.a_, b1 = x.b_, c1 = x.c_, d1 = x.d_;
    i128 a2 = y.a_, b2 = y.b_, c2 = y.c_, d2 = y.d_;
    // r2^2 = 2, i^2 = -1, (i r2)^2 = -2
    i128 ra = a1 * a2 + 2 * b1 * b2 - c1 * c2 - 2 * d1 * d2;
    i128 rb = a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2;
    i128 rc = a1 * c2 + c1 * a2 + 2 * b1 * d2 + 2 * d1 * b2;
    i128 rd = a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2;
    return reduce(ra, rb, rc, rd, i128(x.den_) * y.den_);
}

QExt qext_inverse(const QExt& q) {
    if (q.is_zero()) throw std::domain_error("QExt: division by zero");
    // q = A + B i with A, B in Q(r2); 1/q = (A - B i) / (A^2 + B^2).
    QExt A(q.a(), q.b(), 0, 0, q.den()), B(q.c(), q.d(), 0, 0, q.den());
    QExt N = A * A + B * B;  // p + s r2
    // 1/(p + s r2) = (p - s r2) / (p^2 - 2 s^2)
    QExt Nc(N.a(), -N.b(), 0, 0, N.den());
    QExt nn = N * Nc;  // rational
    QExt ninv = QExt::rational(nn.den(), nn.a());
    QExt conj(q.a(), q.b(), -q.c(), -q.d(), q.den());
    return conj * Nc * ninv;
}

int QExt::support() const { return (a_ != 0) + (b_ != 0) + (c_ != 0) + (d_ != 0); }

std::string QExt::str() const {
    if (is_zero()) return "0";
    const char* units[4] = {"", "r2", "i", "i*r2"};
    std::int64_t comps[4] = {a_, b_, c_, d_};
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        std::int64_t num = comps[k];
        if (num == 0) continue;
        if (!first) os << (num < 0 ? " - " : " + ");
        else if (num < 0) os << "-";
        std::string mag = rational_str(num < 0 ? -num : num, den_);
        if (k == 0) os << mag;
        else if (mag == "1") os << units[k];
        else os << mag << "*" << units[k];
        first = false;
    }
    if (support() > 1) return "(" + os.str() + ")";
    return os.str();
}

std::size_t QExt::hash() const {
    std::size_t h = std::hash<std::int64_t>()(a_);
    for (std::int64_t v : {b_, c_, d_, den_}) h = h * 1000003u ^ std::hash<std::int64_t>()(v);
    return h;
}

Scalar::Scalar(const QExt& q) {
    if (!q.is_zero()) terms_.push_back({Degree{}, q});
}

Scalar::Scalar(const QExt& q, Degree d) {
    if (!q.is_zero()) terms_.push_back({d, q});
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& tm : r.terms_) tm.q = -tm.q;
    return r;
}

namespace {

template <bool Subtract>
Scalar::Storage merge(const Scalar::Storage& x, const Scalar::Storage& y) {
    Scalar::Storage out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].deg < y[j].deg)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].deg < x[i].deg) {
            out.push_back({y[j].deg, Subtract ? -y[j].q : y[j].q});
            ++j;
        } else {
            QExt s = Subtract ? x[i].q - y[j].q : x[i].q + y[j].q;
            if (!s.is_zero()) out.push_back({x[i].deg, s});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Scalar operator+(const Scalar& x, const Scalar& y) {
    Scalar r;
    r.terms_ = merge<false>(x.terms_, y.terms_);
    return r;
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    Scalar r;
    r.terms_ = merge<true>(x.terms_, y.terms_);
    return r;
}

Scalar& Scalar::operator+=(const Scalar& y) {
    terms_ = merge<false>(terms_, y.terms_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) {
    terms_ = merge<true>(terms_, y.terms_);
    return *this;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    Scalar r;
    if (x.terms_.empty() || y.terms_.empty()) return r;
    if (x.terms_.size() == 1 && y.terms_.size() == 1) {
        const auto& p = x.terms_[0];
        const auto& q = y.terms_[0];
        Degree d{std::uint8_t(p.deg.t + q.deg.t), std::uint8_t(p.deg.u + q.deg.u),
                 std::uint8_t(p.deg.v + q.deg.v)};
        r.terms_.push_back({d, p.q * q.q});
        return r;
    }
    for (const auto& p : x.terms_) {
        Scalar part;
        for (const auto& q : y.terms_) {
            Degree d{std::uint8_t(p.deg.t + q.deg.t), std::uint8_t(p.deg.u + q.deg.u),
                     std::uint8_t(p.deg.v + q.deg.v)};
            part.terms_.push_back({d, p.q * q.q});
        }
        r += part;
    }
    return r;
}

Scalar Scalar::scaled(const QExt& q) const {
    if (q.is_zero()) return Scalar();
    Scalar r = *this;
    for (auto& tm : r.terms_) tm.q = tm.q * q;
    return r;
}

bool operator==(const Scalar& x, const Scalar& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (std::size_t k = 0; k < x.terms_.size(); ++k)
        if (x.terms_[k].deg != y.terms_[k].deg || x.terms_[k].q != y.terms_[k].q) return false;
    return true;
}

Degree Scalar::max_degree() const {
    Degree m;
    for (const auto& tm : terms_) {
        m.t = std::max(m.t, tm.deg.t);
        m.u = std::max(m.u, tm.deg.u);
        m.v = std::max(m.v, tm.deg.v);
    }
    return m;
}

namespace {
QExt qpow(const QExt& x, unsigned k) {
    QExt r(1);
    for (unsigned j = 0; j < k; ++j) r *= x;
    return r;
}
}  // namespace

QExt Scalar::evaluate(const QExt& t, const QExt& u, const QExt& v) const {
    QExt r;
    for (const auto& tm : terms_)
        r += tm.q * qpow(t, tm.deg.t) * qpow(u, tm.deg.u) * qpow(v, tm.deg.v);
    return r;
}

Scalar Scalar::substitute(const Scalar& t, const Scalar& u, const Scalar& v) const {
    Scalar r;
    for (const auto& tm : terms_)
        r += Scalar(tm.q) * pow(t, tm.deg.t) * pow(u, tm.deg.u) * pow(v, tm.deg.v);
    return r;
}

bool Scalar::is_negative_monomial() const {
    if (terms_.size() != 1 || terms_[0].q.support() != 1) return false;
    const QExt& q = terms_[0].q;
    return q.a() < 0 || q.b() < 0 || q.c() < 0 || q.d() < 0;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Scalar single(it->q, it->deg);
        bool neg = single.is_negative_monomial();
        QExt q = neg ? -it->q : it->q;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        std::string vars;
        auto add_var = [&](const char* name, unsigned k) {
            if (k == 0) return;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (k > 1) vars += "^" + std::to_string(k);
        };
        add_var("t", it->deg.t);
        add_var("u", it->deg.u);
        add_var("v", it->deg.v);
        if (vars.empty()) os << q.str();
        else if (q.is_one()) os << vars;
        else os << q.str() << "*" << vars;
        first = false;
    }
    return os.str();
}

std::size_t Scalar::hash() const {
    std::size_t h = terms_.size();
    for (const auto& tm : terms_)
        h = h * 31 + (tm.deg.t | (tm.deg.u << 8) | (tm.deg.v << 16)) * 7919 + tm.q.hash();
    return h;
}

Scalar pow(const Scalar& x, unsigned k) {
    Scalar r(1);
    for (unsigned j = 0; j < k; ++j) r *= x;
    return r;
}

}  // namespace daha
