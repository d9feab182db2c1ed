#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "majordex/abindex.hpp"
#include "majordex/error.hpp"
#include "majordex/qarith.hpp"

// Finite bounded graded posets given by their cover relations.
namespace majordex::poset {

using ElementId = std::size_t;
using Cover = std::pair<ElementId, ElementId>;  // (lower, upper)

enum class PosetErrorKind {
    Empty,
    DuplicateElement,
    UnknownElement,
    SelfCover,
    DuplicateCover,
    Cycle,
    NoUniqueMinimum,
    NoUniqueMaximum,
    NotGraded,
};

const char* to_string(PosetErrorKind kind);

class PosetError : public Error {
public:
    PosetError(PosetErrorKind kind, const std::string& message)
        : Error("E_POSET", std::string(to_string(kind)) + ": " + message), kind_(kind) {}
    PosetErrorKind kind() const noexcept { return kind_; }

private:
    PosetErrorKind kind_;
};

// Dense bitset over element ids.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t size) : words_((size + 63) / 64, 0) {}
    void insert(ElementId x) { words_[x / 64] |= std::uint64_t{1} << (x % 64); }
    bool contains(ElementId x) const { return (words_[x / 64] >> (x % 64)) & 1U; }
    ElementSet& operator|=(const ElementSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

private:
    std::vector<std::uint64_t> words_;
};

// Immutable validated graded poset with a unique minimum and maximum.
class GradedPoset {
public:
    // Validates the raw data; throws PosetError naming the violated condition.
    static GradedPoset from_covers(std::vector<std::string> names, const std::vector<Cover>& covers);
    static GradedPoset from_named_covers(std::vector<std::string> names,
                                         const std::vector<std::pair<std::string, std::string>>& covers);

    std::size_t size() const noexcept { return names_.size(); }
    unsigned rank() const noexcept { return rank_of_[top_]; }
    ElementId bottom() const noexcept { return bottom_; }
    ElementId top() const noexcept { return top_; }
    const std::string& name(ElementId x) const { return names_.at(x); }
    std::optional<ElementId> find(const std::string& name) const;
    unsigned rank_of(ElementId x) const { return rank_of_.at(x); }
    std::span<const ElementId> upper_covers(ElementId x) const { return up_.at(x); }
    std::span<const ElementId> lower_covers(ElementId x) const { return down_.at(x); }
    std::span<const ElementId> level(unsigned r) const { return levels_.at(r); }
    std::vector<Cover> covers() const;
    bool leq(ElementId x, ElementId y) const { return above_[x].contains(y); }
    // Elements z with x <= z <= y, listed by rank.
    std::vector<ElementId> interval_elements(ElementId x, ElementId y) const;
    // The closed interval [x, y] as a poset of its own (names preserved).
    GradedPoset interval(ElementId x, ElementId y) const;
    // Same elements with every cover reversed.
    GradedPoset dual() const;

private:
    GradedPoset() = default;

    std::vector<std::string> names_;
    std::vector<std::vector<ElementId>> up_, down_;
    std::vector<unsigned> rank_of_;
    std::vector<std::vector<ElementId>> levels_;
    std::vector<ElementSet> above_;  // above_[x] = {y : x <= y}
    ElementId bottom_ = 0, top_ = 0;
};

// Flag f-vector of a poset of rank n + 1, keyed by subsets S of {1..n}
// (bit i-1 <-> rank i). Every subset is present.
using FlagVector = std::map<abindex::SubsetMask, Integer>;

FlagVector flag_f(const GradedPoset& p);
// h_S = sum over T in S of (-1)^|S - T| f_T.
FlagVector flag_h(const FlagVector& f);
// Inverse transform f_S = sum over T in S of h_T.
FlagVector flag_f_from_h(const FlagVector& h);

// Psi(P) = sum_S h_S u_S. Throws DomainError for rank 0.
abindex::AbPoly ab_index(const GradedPoset& p);
// Psi(P) = sum_S f_S v_S; an independent route used as an oracle.
abindex::AbPoly ab_index_via_f(const GradedPoset& p);

// Mobius function; throws DomainError unless x <= y.
Integer mobius(const GradedPoset& p, ElementId x, ElementId y);
// mu(x, y) for every y >= x (zero elsewhere).
std::vector<Integer> mobius_from(const GradedPoset& p, ElementId x);
bool is_eulerian(const GradedPoset& p);
bool is_simplicial(const GradedPoset& p);

// (f_0, ..., f_n) with f_0 = 1 and f_i the number of rank-i elements.
std::vector<Integer> f_vector(const GradedPoset& p);
// h(q) = sum_i f_i q^i (1 - q)^(n - i). Throws DomainError unless simplicial.
qarith::QPoly h_polynomial(const GradedPoset& p);

// Element (x, y) gets id x * |Q| + y and the name "(x,y)".
GradedPoset cartesian_product(const GradedPoset& p, const GradedPoset& q);
// (P - top) x (Q - top) with a new top; both operands need rank >= 1.
// Non-top elements are numbered as in the Cartesian product of the
// tops-removed posets (relative id order kept); the new top comes last.
GradedPoset dual_diamond(const GradedPoset& p, const GradedPoset& q);
GradedPoset pyr_poset(const GradedPoset& p);    // P x B_1
GradedPoset bipyr_poset(const GradedPoset& p);  // P <>* B_2

GradedPoset boolean_algebra(unsigned n);
GradedPoset chain(unsigned n);
// B_n with a new maximum adjoined.
GradedPoset t_poset(unsigned n);
// Face lattice of the n-simplex, that is B_(n+1).
GradedPoset simplex_lattice(unsigned n);
// Face lattice of the n-dimensional cross-polytope.
GradedPoset cross_polytope(unsigned n);
// Rank 2 poset with r atoms: bottom "0" is id 0, atoms "a1".."ar" are ids
// 1..r and the top "1" is id r + 1.
GradedPoset fan_poset(unsigned r);

} // namespace majordex::poset
