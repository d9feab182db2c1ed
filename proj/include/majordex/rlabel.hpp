#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "majordex/abindex.hpp"
#include "majordex/poset.hpp"

// Edge-labelled posets, R-labelings and Jordan-Holder descent words.
namespace majordex::rlabel {

// A cover label: an integer, a pair (j, i), or the distinguished zero used
// by signed labelings.
struct Label {
    enum class Kind { Integer, Pair, Zero };

    Kind kind = Kind::Zero;
    int first = 0;   // the integer value, or j of a pair
    int second = 0;  // i of a pair

    static Label integer(int v) { return {Kind::Integer, v, 0}; }
    static Label pair(int j, int i) { return {Kind::Pair, j, i}; }
    static Label zero() { return {Kind::Zero, 0, 0}; }
    // Parses "3", "(-1,2)" or "0" (the zero symbol).
    static Label parse(std::string_view text);

    friend bool operator==(const Label&, const Label&) = default;
};

std::string to_string(const Label& l);

using LabelOrder = std::function<std::strong_ordering(const Label&, const Label&)>;

// Integers numerically; pairs lexicographically; zero against a pair (j, i)
// is below it iff j > 0; zero against an integer compares as 0. Throws
// DomainError when an integer is compared with a pair.
std::strong_ordering standard_label_order(const Label& lhs, const Label& rhs);

class LabeledPoset {
public:
    // Every cover of `poset` must receive exactly one label.
    LabeledPoset(poset::GradedPoset poset, std::map<poset::Cover, Label> labels,
                 LabelOrder order = standard_label_order);

    const poset::GradedPoset& poset() const noexcept { return poset_; }
    const Label& label(poset::ElementId lower, poset::ElementId upper) const;
    const std::map<poset::Cover, Label>& labels() const noexcept { return labels_; }
    std::strong_ordering compare(const Label& a, const Label& b) const { return order_(a, b); }

private:
    poset::GradedPoset poset_;
    std::map<poset::Cover, Label> labels_;
    LabelOrder order_;
};

struct RLabelingCheck {
    bool ok = true;
    // On failure: an interval [lower, upper] and its number of weakly
    // increasing maximal chains (zero or at least two).
    std::optional<std::pair<poset::ElementId, poset::ElementId>> witness;
    std::size_t increasing_chains = 0;
};

// Scans every interval, counting its weakly increasing maximal chains.
RLabelingCheck is_r_labeling(const LabeledPoset& lp);

// Descent word of each maximal chain (one entry per chain, repeats kept).
std::vector<abindex::AbWord> jordan_holder_words(const LabeledPoset& lp);
// Label sequence of each maximal chain, in the same order.
std::vector<std::vector<Label>> jordan_holder_set(const LabeledPoset& lp);

// Sum of the Jordan-Holder descent words; throws DomainError unless the
// labeling is an R-labeling.
abindex::AbPoly bs_sum(const LabeledPoset& lp);

// Product of chains of ranks alpha_1, ..., alpha_k; a cover is labelled by
// the coordinate it raises.
LabeledPoset product_chain_labeling(const std::vector<int>& alpha);

// Fan poset with r atoms; atom covers carry (-1, i), (2, i), ..., (r, i)
// and the covers of the top carry zero.
LabeledPoset fan_labeling(unsigned r, int index);

// Dual diamond product of labelled posets: covers away from the new top
// inherit the label of the coordinate they raise; covers of the new top
// receive `top_label`.
LabeledPoset labeled_dual_diamond(const LabeledPoset& p, const LabeledPoset& q, const Label& top_label);
LabeledPoset labeled_cartesian_product(const LabeledPoset& p, const LabeledPoset& q);

// fan(r_1) <>* ... <>* fan(r_n) with inherited pair labels and zero on the
// top covers.
LabeledPoset signed_labeling(const std::vector<int>& r);

} // namespace majordex::rlabel
