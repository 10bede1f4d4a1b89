#include "daha/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace daha {

char family_char(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::D: return 'D';
    }
    return '?';
}

Family family_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return Family::A;
        case 'B': case 'b': return Family::B;
        case 'D': case 'd': return Family::D;
    }
    throw std::invalid_argument(std::string("unknown Weyl family '") + c + "'");
}

WeylType::WeylType(Family f, int rank) : family(f), n(rank) {
    if (rank < 1 || rank > kMaxRank)
        throw std::invalid_argument("rank must lie in 1.." + std::to_string(kMaxRank));
    if (f == Family::D && rank < 2) throw std::invalid_argument("type D needs rank >= 2");
}

int WeylType::coxeter_m(int i, int j) const {
    if (i == j) return 1;
    if (i > j) std::swap(i, j);
    if (family == Family::A || j < n) return (j - i == 1) ? 3 : 2;
    // j == n is the special generator
    if (family == Family::B) return (i == n - 1) ? 4 : 2;
    // type D: s_n is attached to s_{n-2}
    return (i == n - 2) ? 3 : 2;
}

std::string WeylType::str() const { return std::string(1, family_char(family)) + std::to_string(n); }

GroupElement::GroupElement(const WeylType& ty) : ty_(ty) {
    for (int j = 0; j < ty.n; ++j) img_[j] = static_cast<std::int8_t>(j + 1);
}

GroupElement::GroupElement(const WeylType& ty, const std::vector<int>& images) : ty_(ty) {
    if (static_cast<int>(images.size()) != ty.n)
        throw std::invalid_argument("signed permutation has wrong length");
    std::vector<bool> seen(ty.n + 1, false);
    int negs = 0;
    for (int j = 0; j < ty.n; ++j) {
        int a = std::abs(images[j]);
        if (a < 1 || a > ty.n || seen[a]) throw std::invalid_argument("not a signed permutation");
        seen[a] = true;
        if (images[j] < 0) ++negs;
        img_[j] = static_cast<std::int8_t>(images[j]);
    }
    if (ty.family == Family::A && negs > 0)
        throw std::invalid_argument("type A element cannot change signs");
    if (ty.family == Family::D && negs % 2 != 0)
        throw std::invalid_argument("type D element needs an even number of sign changes");
}

GroupElement GroupElement::from_code(const WeylType& ty, std::uint32_t code) {
    std::vector<int> images(ty.n);
    for (int j = 0; j < ty.n; ++j) {
        unsigned nib = (code >> (4 * j)) & 0xF;
        int v = static_cast<int>(nib & 7) + 1;
        images[j] = (nib & 8) ? -v : v;
    }
    return GroupElement(ty, images);
}

GroupElement GroupElement::from_code_unchecked(const WeylType& ty, std::uint32_t code) {
    GroupElement g;
    g.ty_ = ty;
    for (int j = 0; j < ty.n; ++j) {
        unsigned nib = (code >> (4 * j)) & 0xF;
        int v = static_cast<int>(nib & 7) + 1;
        g.img_[j] = static_cast<std::int8_t>((nib & 8) ? -v : v);
    }
    return g;
}

std::uint32_t GroupElement::identity_code(int n) {
    std::uint32_t c = 0;
    for (int j = 0; j < n; ++j) c |= static_cast<std::uint32_t>(j) << (4 * j);
    return c;
}

int GroupElement::num_sign_changes() const {
    int k = 0;
    for (int j = 0; j < ty_.n; ++j) k += img_[j] < 0;
    return k;
}

bool GroupElement::is_identity() const {
    for (int j = 0; j < ty_.n; ++j)
        if (img_[j] != j + 1) return false;
    return true;
}

int GroupElement::length() const {
    int len = 0;
    const int n = ty_.n;
    for (int i = 0; i < n; ++i) {
        int si = img_[i] > 0 ? 1 : -1, a = std::abs(img_[i]);
        if (ty_.family == Family::B && si < 0) ++len;  // root e_i
        for (int j = i + 1; j < n; ++j) {
            int sj = img_[j] > 0 ? 1 : -1, b = std::abs(img_[j]);
            // e_i - e_j  ->  si e_a - sj e_b
            if (a < b ? si < 0 : sj > 0) ++len;
            if (ty_.family != Family::A) {
                // e_i + e_j  ->  si e_a + sj e_b
                if (a < b ? si < 0 : sj < 0) ++len;
            }
        }
    }
    return len;
}

std::uint32_t GroupElement::code() const {
    std::uint32_t c = 0;
    for (int j = 0; j < ty_.n; ++j) {
        int v = img_[j];
        std::uint32_t nib = static_cast<std::uint32_t>(std::abs(v) - 1) | (v < 0 ? 8u : 0u);
        c |= nib << (4 * j);
    }
    return c;
}

std::string GroupElement::str() const {
    std::string s = "[";
    for (int j = 0; j < ty_.n; ++j) {
        if (j) s += ",";
        s += std::to_string(img_[j]);
    }
    return s + "]";
}

GroupElement compose(const GroupElement& u, const GroupElement& v) {
    if (!(u.ty_ == v.ty_)) throw std::invalid_argument("compose: Weyl type mismatch");
    GroupElement r(u.ty_);
    for (int j = 0; j < u.ty_.n; ++j) {
        int k = v.img_[j];
        int m = u.img_[std::abs(k) - 1];
        r.img_[j] = static_cast<std::int8_t>(k < 0 ? -m : m);
    }
    return r;
}

GroupElement inverse(const GroupElement& w) {
    GroupElement r(w.ty_);
    for (int j = 0; j < w.ty_.n; ++j) {
        int k = w.img_[j];
        r.img_[std::abs(k) - 1] = static_cast<std::int8_t>(k < 0 ? -(j + 1) : (j + 1));
    }
    return r;
}

GroupElement rho_star(const GroupElement& w) {
    GroupElement r(WeylType(Family::A, w.ty_.n));
    for (int j = 0; j < w.ty_.n; ++j) r.img_[j] = static_cast<std::int8_t>(std::abs(w.img_[j]));
    return r;
}

GroupElement generator(const WeylType& ty, int i) {
    if (i < 1 || i > ty.num_generators())
        throw std::out_of_range("generator index " + std::to_string(i) + " out of range for " + ty.str());
    std::vector<int> im(ty.n);
    std::iota(im.begin(), im.end(), 1);
    if (i < ty.n) {
        std::swap(im[i - 1], im[i]);
    } else if (ty.family == Family::B) {
        im[ty.n - 1] = -ty.n;
    } else {  // D
        im[ty.n - 2] = -ty.n;
        im[ty.n - 1] = -(ty.n - 1);
    }
    return GroupElement(ty, im);
}

GroupElement word_to_element(const WeylType& ty, const std::vector<int>& word) {
    GroupElement w(ty);
    for (int i : word) w = compose(w, generator(ty, i));
    return w;
}

GroupElement reflection(const WeylType& ty, ReflectionKind kind, int i, int j) {
    const int n = ty.n;
    auto check = [n](int k) {
        if (k < 1 || k > n) throw std::out_of_range("reflection index out of range");
    };
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    switch (kind) {
        case ReflectionKind::Plain:
            check(i); check(j);
            if (i == j) throw std::invalid_argument("reflection (i,j) needs i != j");
            std::swap(im[i - 1], im[j - 1]);
            break;
        case ReflectionKind::Barred:
            if (ty.family == Family::A) throw std::invalid_argument("barred reflection needs type B or D");
            check(i); check(j);
            if (i == j) throw std::invalid_argument("reflection (i,j) needs i != j");
            im[i - 1] = -j;
            im[j - 1] = -i;
            break;
        case ReflectionKind::Tau:
            if (ty.family != Family::B) throw std::invalid_argument("sign change tau needs type B");
            check(i);
            im[i - 1] = -i;
            break;
    }
    return GroupElement(ty, im);
}

bool is_left_descent(const GroupElement& w, int i) {
    return compose(generator(w.type(), i), w).length() < w.length();
}

std::vector<int> canonical_lift(const GroupElement& w) {
    std::vector<int> word;
    GroupElement cur = w;
    int len = cur.length();
    const int g = w.type().num_generators();
    while (len > 0) {
        bool found = false;
        for (int i = 1; i <= g; ++i) {
            GroupElement next = compose(generator(w.type(), i), cur);
            int nl = next.length();
            if (nl < len) {
                word.push_back(i);
                cur = next;
                len = nl;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("canonical_lift: no descent found");
    }
    return word;
}

std::size_t group_order(const WeylType& ty) {
    std::size_t f = 1;
    for (int k = 2; k <= ty.n; ++k) f *= k;
    if (ty.family == Family::B) return f << ty.n;
    if (ty.family == Family::D) return f << (ty.n - 1);
    return f;
}

std::vector<GroupElement> enumerate(const WeylType& ty, std::size_t budget) {
    if (group_order(ty) > budget)
        throw std::length_error("group " + ty.str() + " exceeds enumeration budget");
    std::vector<GroupElement> out;
    out.reserve(group_order(ty));
    std::vector<int> perm(ty.n);
    std::iota(perm.begin(), perm.end(), 1);
    const unsigned sign_patterns = ty.family == Family::A ? 1u : (1u << ty.n);
    do {
        for (unsigned mask = 0; mask < sign_patterns; ++mask) {
            if (ty.family == Family::D && __builtin_popcount(mask) % 2 != 0) continue;
            std::vector<int> im = perm;
            for (int j = 0; j < ty.n; ++j)
                if (mask & (1u << j)) im[j] = -im[j];
            out.emplace_back(ty, im);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace daha
