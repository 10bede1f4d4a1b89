#include "daha/parse.hpp"

#include <cctype>
#include <optional>

namespace daha {

namespace {

// Either a bare scalar or an algebra element; scalars stay scalars until
// they meet a generator, so parse_scalar needs no algebra.
struct Value {
    std::optional<Scalar> scalar;
    Element elem;
};

class Parser {
public:
    Parser(const Algebra* alg, const std::string& text) : alg_(alg), s_(text) {}

    Value parse_all() {
        Value v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    long read_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 12) fail("integer too large");
        return std::stol(s_.substr(start, pos_ - start));
    }

    bool starts_factor() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '[' || c == '~';
    }

    const Algebra& algebra() const {
        if (!alg_) throw ParseError("algebra atom in a scalar expression", pos_);
        return *alg_;
    }

    Element to_elem(const Value& v) const {
        if (v.scalar) return algebra().scalar(*v.scalar);
        return v.elem;
    }

    Value add(const Value& a, const Value& b, bool negate) {
        if (a.scalar && b.scalar) return {negate ? *a.scalar - *b.scalar : *a.scalar + *b.scalar, {}};
        Element x = to_elem(a), y = to_elem(b);
        return {std::nullopt, negate ? x - y : x + y};
    }

    Value mul(const Value& a, const Value& b) {
        if (a.scalar && b.scalar) return {*a.scalar * *b.scalar, {}};
        if (a.scalar) return {std::nullopt, *a.scalar * b.elem};
        if (b.scalar) return {std::nullopt, *b.scalar * a.elem};
        return {std::nullopt, algebra().mul(a.elem, b.elem)};
    }

    Value expr() {
        bool neg = false;
        if (peek('+')) ++pos_;
        else if (peek('-')) {
            ++pos_;
            neg = true;
        }
        Value v = term();
        if (neg) v = mul(Value{Scalar(-1), {}}, v);
        while (true) {
            if (peek('+')) {
                ++pos_;
                v = add(v, term(), false);
            } else if (peek('-')) {
                ++pos_;
                v = add(v, term(), true);
            } else {
                return v;
            }
        }
    }

    Value term() {
        Value v = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                v = mul(v, factor());
            } else if (starts_factor()) {
                v = mul(v, factor());
            } else {
                return v;
            }
        }
    }

    Value factor() {
        Value v = atom();
        if (peek('^')) {
            ++pos_;
            long k = read_int();
            if (k > 64) fail("exponent too large");
            if (v.scalar) return {daha::pow(*v.scalar, static_cast<unsigned>(k)), {}};
            return {std::nullopt, algebra().pow(v.elem, static_cast<unsigned>(k))};
        }
        return v;
    }

    int index(long k) const {
        const int n = algebra().type().n;
        if (k < 1 || k > n) throw ParseError("index " + std::to_string(k) + " out of range", pos_);
        return static_cast<int>(k);
    }

    // "(i,j)" after the opening parenthesis has been seen, or std::nullopt
    // when the parenthesis opens a subexpression.
    std::optional<std::pair<int, int>> try_pair() {
        std::size_t save = pos_;
        skip_ws();
        std::size_t p = pos_;
        while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
        std::size_t q = p;
        while (q < s_.size() && std::isspace(static_cast<unsigned char>(s_[q]))) ++q;
        if (p == pos_ || q >= s_.size() || s_[q] != ',') {
            pos_ = save;
            return std::nullopt;
        }
        long i = read_int();
        expect(',');
        long j = read_int();
        expect(')');
        return std::make_pair(index(i), index(j));
    }

    Value atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = read_int(), den = 1;
            if (peek('/')) {
                ++pos_;
                den = read_int();
                if (den == 0) fail("zero denominator");
            }
            return {Scalar(QExt::rational(num, den)), {}};
        }
        if (c == '(') {
            ++pos_;
            if (auto pr = try_pair()) {
                if (pr->first == pr->second) fail("reflection needs distinct indices");
                return group(ReflectionKind::Plain, pr->first, pr->second);
            }
            Value v = expr();
            expect(')');
            return v;
        }
        if (c == '[') {
            ++pos_;
            long i = read_int();
            expect(',');
            long j = read_int();
            expect(']');
            return spin(SpinReflectionKind::Plain, index(i), index(j));
        }
        if (c == '~') {
            ++pos_;
            if (peek('(')) {
                ++pos_;
                long i = read_int();
                expect(',');
                long j = read_int();
                expect(')');
                return group(ReflectionKind::Barred, index(i), index(j));
            }
            expect('[');
            long i = read_int();
            if (peek(',')) {
                ++pos_;
                long j = read_int();
                expect(']');
                return spin(SpinReflectionKind::Barred, index(i), index(j));
            }
            expect(']');
            return spin(SpinReflectionKind::BarSingle, index(i), 0);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Value group(ReflectionKind k, int i, int j) {
        try {
            return {std::nullopt, algebra().group_element(reflection(algebra().type(), k, i, j))};
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    Value spin(SpinReflectionKind k, int i, int j) {
        try {
            return {std::nullopt, algebra().spin_element(spin_reflection(algebra().type(), k, i, j))};
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    Value identifier() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string name = s_.substr(start, pos_ - start);
        const std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string digits = s_.substr(dstart, pos_ - dstart);
        if (digits.empty()) {
            if (name == "t") return {Scalar::t(), {}};
            if (name == "u") return {Scalar::u(), {}};
            if (name == "v") return {Scalar::v(), {}};
            if (name == "i") return {Scalar::i(), {}};
            pos_ = start;
            fail("unknown symbol '" + name + "'");
        }
        if (name == "r" && digits == "2") return {Scalar::sqrt2(), {}};
        if (digits.size() > 2) {
            pos_ = dstart;
            fail("index too large");
        }
        const long k = std::stol(digits);
        const Algebra& alg = algebra();
        try {
            if (name == "tau") return {std::nullopt, alg.group_element(reflection(alg.type(), ReflectionKind::Tau, index(k)))};
            if (name == "beta" || name == "nu") {
                CliffordElement x = name == "beta" ? beta(alg.type(), static_cast<int>(k)) : nu(alg.type(), static_cast<int>(k));
                const bool outer = !alg.has_generator({name == "beta" ? Sym::c : Sym::e, 1});
                return {std::nullopt, alg.clifford(x, outer)};
            }
            static const std::pair<const char*, Sym> table[] = {
                {"x", Sym::x}, {"y", Sym::y}, {"c", Sym::c}, {"e", Sym::e},
                {"s", Sym::s}, {"t", Sym::t}, {"xi", Sym::xi}, {"eta", Sym::eta}};
            for (const auto& [nm, sym] : table) {
                if (name != nm) continue;
                Gen g{sym, static_cast<int>(k)};
                if (!alg.has_generator(g)) {
                    if (sym == Sym::c) g.sym = Sym::outer_c;
                    if (sym == Sym::e) g.sym = Sym::outer_e;
                }
                if (!alg.has_generator(g)) {
                    pos_ = start;
                    fail("generator " + name + digits + " not in " + alg.name());
                }
                return {std::nullopt, alg.gen(g)};
            }
        } catch (const std::invalid_argument& e) {
            pos_ = start;
            fail(e.what());
        } catch (const std::out_of_range& e) {
            pos_ = start;
            fail(e.what());
        }
        pos_ = start;
        fail("unknown symbol '" + name + digits + "'");
    }

    const Algebra* alg_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse(const Algebra& alg, const std::string& text) {
    Parser p(&alg, text);
    Value v = p.parse_all();
    if (v.scalar) return alg.scalar(*v.scalar);
    return v.elem;
}

Scalar parse_scalar(const std::string& text) {
    Parser p(nullptr, text);
    Value v = p.parse_all();
    return *v.scalar;
}

}  // namespace daha
