#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace daha {

inline constexpr int kMaxRank = 6;

enum class Family : std::uint8_t { A, B, D };

char family_char(Family f);
Family family_from_char(char c);

// Classical Weyl group. Type A is realized on n letters (S_n), so every
// family acts on the same n-dimensional space.
struct WeylType {
    Family family = Family::A;
    int n = 2;

    WeylType() = default;
    WeylType(Family f, int rank);

    // Simple generators: n-1 for type A, n for B and D.
    int num_generators() const { return family == Family::A ? n - 1 : n; }
    // Coxeter matrix entry for simple generators i, j (1-based).
    int coxeter_m(int i, int j) const;
    std::string str() const;
    friend bool operator==(const WeylType&, const WeylType&) = default;
};

// Signed permutation: img[j-1] = +-w(j). Family membership is checked at
// construction.
class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(const WeylType& ty);  // identity
    GroupElement(const WeylType& ty, const std::vector<int>& images);

    static GroupElement from_code(const WeylType& ty, std::uint32_t code);
    // As from_code, without family validation; for codes produced by code().
    static GroupElement from_code_unchecked(const WeylType& ty, std::uint32_t code);
    static std::uint32_t identity_code(int n);

    const WeylType& type() const { return ty_; }
    int rank() const { return ty_.n; }
    // Signed image of index i (1-based).
    int act_index(int i) const { return img_[i - 1]; }
    int num_sign_changes() const;
    bool is_identity() const;
    int length() const;
    // Packed 4 bits per letter; equal codes iff equal elements of one type.
    std::uint32_t code() const;
    // "[2,-1,3]"
    std::string str() const;

    friend bool operator==(const GroupElement& x, const GroupElement& y) {
        return x.ty_ == y.ty_ && x.img_ == y.img_;
    }
    friend bool operator<(const GroupElement& x, const GroupElement& y) {
        return x.code() < y.code();
    }

private:
    WeylType ty_;
    std::array<std::int8_t, kMaxRank> img_{};
    friend GroupElement compose(const GroupElement&, const GroupElement&);
    friend GroupElement inverse(const GroupElement&);
    friend GroupElement rho_star(const GroupElement&);
};

// (u o v)(j) = u(v(j)); the left action on indices satisfies
// act(u o v) = act(u) act(v).
GroupElement compose(const GroupElement& u, const GroupElement& v);
GroupElement inverse(const GroupElement& w);
// Forget all signs; the image lies in the type A subgroup of the same rank.
GroupElement rho_star(const GroupElement& w);

GroupElement generator(const WeylType& ty, int i);
GroupElement word_to_element(const WeylType& ty, const std::vector<int>& word);

enum class ReflectionKind { Plain, Barred, Tau };
// Plain: transposition (i,j); Barred: transposition with sign changes at
// i and j (types B, D); Tau: sign change at i (type B, j ignored).
GroupElement reflection(const WeylType& ty, ReflectionKind kind, int i, int j = 0);

bool is_left_descent(const GroupElement& w, int i);
// Lexicographically least reduced word: greedy smallest left descent.
std::vector<int> canonical_lift(const GroupElement& w);

// All elements, in a deterministic order. Throws std::length_error when the
// group order exceeds the budget.
std::vector<GroupElement> enumerate(const WeylType& ty, std::size_t budget = 50000);
std::size_t group_order(const WeylType& ty);

}  // namespace daha
