#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "majordex/linear_combination.hpp"
#include "majordex/qarith.hpp"

// The ring Z<a,b> of noncommutative ab-polynomials, its cd-subring, the
// derivations G and D, the pyramid/bipyramid operators, and the Major
// MacMahon map sending an ab-word to q^(sum of the positions of its b's).
namespace majordex::abindex {

// Subset of {1, ..., 64}: bit i-1 is set iff i is a member.
using SubsetMask = std::uint64_t;

SubsetMask subset_from_elements(const std::vector<int>& elements);
std::vector<int> subset_elements(SubsetMask mask);

// Word over {a, b}. Position i (1-based, left to right) is bit i-1 of
// `bits`; a set bit is the letter b.
class AbWord {
public:
    static constexpr unsigned max_length = 64;

    constexpr AbWord() = default;
    AbWord(SubsetMask bits, unsigned length);
    // Parses a string over {a, b}; "" or "1" is the empty word.
    static AbWord parse(std::string_view letters);

    unsigned length() const noexcept { return length_; }
    SubsetMask bits() const noexcept { return bits_; }
    bool is_b(unsigned position) const { return (bits_ >> (position - 1)) & 1U; }
    unsigned b_count() const noexcept;
    // Sum of the 1-based positions holding b.
    unsigned b_position_sum() const noexcept;

    AbWord prefix(unsigned count) const;
    AbWord suffix_from(unsigned position) const;  // letters position..length
    AbWord reversed() const;
    friend AbWord operator*(const AbWord& lhs, const AbWord& rhs);

    friend bool operator==(const AbWord&, const AbWord&) = default;
    // Shorter words first; equal lengths compare lexicographically with a < b.
    friend std::strong_ordering operator<=>(const AbWord& lhs, const AbWord& rhs);

private:
    SubsetMask bits_ = 0;
    unsigned length_ = 0;
};

std::string to_string(const AbWord& w);

class AbPoly : public LinearCombination<AbWord> {
public:
    using LinearCombination::LinearCombination;
    AbPoly() = default;
    AbPoly(const LinearCombination<AbWord>& base) : LinearCombination(base) {}  // NOLINT

    static AbPoly one() { return AbPoly(AbWord{}); }
    static AbPoly letter_a() { return AbPoly(AbWord(0, 1)); }
    static AbPoly letter_b() { return AbPoly(AbWord(1, 1)); }
    // c = a + b.
    static AbPoly c();
    // d = ab + ba.
    static AbPoly d();
    // Parses "aa + 2*ab - ba"; the empty word is written "1".
    static AbPoly parse(std::string_view text);

    // Common length of all words; nullopt if zero or heterogeneous.
    std::optional<unsigned> homogeneous_degree() const;

    friend AbPoly operator*(const AbPoly& lhs, const AbPoly& rhs);
};

std::string to_string(const AbPoly& p);
std::ostream& operator<<(std::ostream& os, const AbPoly& p);

// Word over {c, d}; stored left to right as a string of 'c' and 'd'.
class CdWord {
public:
    CdWord() = default;
    explicit CdWord(std::string letters);

    const std::string& letters() const noexcept { return letters_; }
    // (#c) + 2 (#d).
    unsigned weight() const noexcept;

    friend CdWord operator*(const CdWord& lhs, const CdWord& rhs) { return CdWord(lhs.letters_ + rhs.letters_); }
    friend bool operator==(const CdWord&, const CdWord&) = default;
    friend std::strong_ordering operator<=>(const CdWord& lhs, const CdWord& rhs);

private:
    std::string letters_;
};

std::string to_string(const CdWord& w);

class CdPoly : public LinearCombination<CdWord> {
public:
    using LinearCombination::LinearCombination;
    CdPoly() = default;
    CdPoly(const LinearCombination<CdWord>& base) : LinearCombination(base) {}  // NOLINT

    static CdPoly parse(std::string_view text);
    friend CdPoly operator*(const CdPoly& lhs, const CdPoly& rhs);
};

std::string to_string(const CdPoly& p);
std::ostream& operator<<(std::ostream& os, const CdPoly& p);

// Every cd-word of the given weight (Fibonacci-many), in increasing order.
std::vector<CdWord> cd_words_of_weight(unsigned weight);

// Major MacMahon map: each word contributes coeff * q^(sum of b-positions).
qarith::QPoly theta(const AbPoly& p);
// q,t-extension: each word contributes coeff * q^(sum of b-positions) * t^(#b).
qarith::QTPoly theta_qt(const AbPoly& p);

// Derivations extended by the Leibniz rule: G(a) = ba, G(b) = ab and
// D(a) = D(b) = ab + ba.
AbPoly derivation_g(const AbPoly& p);
AbPoly derivation_d(const AbPoly& p);
// Pyr(w) = G(w) + w c and Bipyr(w) = D(w) + c w.
AbPoly pyr_op(const AbPoly& p);
AbPoly bipyr_op(const AbPoly& p);

// Substitutes c = a + b, d = ab + ba.
AbPoly expand_cd(const CdWord& w);
AbPoly expand_cd(const CdPoly& p);
// The unique cd-polynomial expanding to p, or nullopt when none exists.
// Throws DomainError unless p is homogeneous (the zero polynomial maps to zero).
std::optional<CdPoly> to_cd(const AbPoly& p);

// Reverses every word.
AbPoly reverse(const AbPoly& p);

// u_S: b exactly at the positions in S. Throws DomainError unless S is in {1..n}.
AbWord word_of_set(SubsetMask s, unsigned n);
AbWord word_of_set(const std::vector<int>& s, unsigned n);
// v_S: b at the positions in S and (a - b) elsewhere.
AbPoly vpoly_of_set(SubsetMask s, unsigned n);
std::vector<int> set_of_word(const AbWord& w);

// Simplicial shelling component of the cd-index for 0 <= i <= n, defined
// by Phi(n, 0) = Psi(B_n) c and Phi(n, i) = G(Phi(n - 1, i - 1)). The chain
// of G's for i = n ends in a zero base, so Phi(n, n) = 0.
CdPoly shelling_component(unsigned n, unsigned i);

} // namespace majordex::abindex
