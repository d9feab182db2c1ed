#include "doctest.h"

#include <algorithm>

#include "majordex/error.hpp"
#include "majordex/permstat.hpp"
#include "majordex/qarith.hpp"
#include "majordex/rlabel.hpp"
#include "support.hpp"

using namespace majordex;
using namespace majordex::rlabel;
using poset::Cover;
using poset::GradedPoset;
using testsupport::ab;

namespace {

LabeledPoset labeled_b2(int first_atom, int second_atom, int first_top, int second_top) {
    GradedPoset b2 = poset::boolean_algebra(2);
    const auto atoms = b2.level(1);
    std::map<Cover, Label> labels{
        {{b2.bottom(), atoms[0]}, Label::integer(first_atom)},
        {{b2.bottom(), atoms[1]}, Label::integer(second_atom)},
        {{atoms[0], b2.top()}, Label::integer(first_top)},
        {{atoms[1], b2.top()}, Label::integer(second_top)},
    };
    return LabeledPoset(std::move(b2), std::move(labels));
}

LabeledPoset increasing_chain(unsigned n) {
    GradedPoset c = poset::chain(n);
    std::map<Cover, Label> labels;
    int next = 1;
    for (const auto& cover : c.covers()) labels[cover] = Label::integer(next++);
    return LabeledPoset(std::move(c), std::move(labels));
}

std::vector<std::string> sorted_words(const LabeledPoset& lp) {
    std::vector<std::string> out;
    for (const auto& w : jordan_holder_words(lp)) out.push_back(abindex::to_string(abindex::AbPoly(w)));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("labels") {
    CHECK(Label::parse("3") == Label::integer(3));
    CHECK(Label::parse("(-1,2)") == Label::pair(-1, 2));
    CHECK(Label::parse(" ( 2 , 1 ) ") == Label::pair(2, 1));
    CHECK(Label::parse("0") == Label::zero());
    CHECK(to_string(Label::pair(-1, 1)) == "(-1,1)");
    CHECK(to_string(Label::zero()) == "0");
    CHECK_THROWS_AS(Label::parse("(1,)"), DomainError);
    CHECK_THROWS_AS(Label::parse("x"), DomainError);

    CHECK(standard_label_order(Label::integer(1), Label::integer(2)) < 0);
    CHECK(standard_label_order(Label::pair(-1, 3), Label::pair(2, 1)) < 0);
    CHECK(standard_label_order(Label::pair(2, 1), Label::pair(2, 3)) < 0);
    CHECK(standard_label_order(Label::zero(), Label::pair(2, 1)) < 0);
    CHECK(standard_label_order(Label::pair(-1, 1), Label::zero()) < 0);
    CHECK(standard_label_order(Label::zero(), Label::zero()) == 0);
    CHECK_THROWS_AS(standard_label_order(Label::integer(1), Label::pair(1, 1)), DomainError);
}

TEST_CASE("label order on pairs and zero is a total order") {
    std::vector<Label> values{Label::zero()};
    for (int j : {-1, 2, 3, 4})
        for (int i = 1; i <= 3; ++i) values.push_back(Label::pair(j, i));
    for (const Label& x : values) {
        for (const Label& y : values) {
            const auto xy = standard_label_order(x, y);
            const auto yx = standard_label_order(y, x);
            CHECK((xy < 0) == (yx > 0));
            CHECK((xy == 0) == (x == y));
            for (const Label& z : values)
                if (xy < 0 && standard_label_order(y, z) < 0) CHECK(standard_label_order(x, z) < 0);
        }
    }
}

TEST_CASE("labeled poset validation") {
    GradedPoset c = poset::chain(2);
    CHECK_THROWS_AS(LabeledPoset(c, {{{0, 1}, Label::integer(1)}}), DomainError);
    CHECK_THROWS_AS(LabeledPoset(c, {{{0, 1}, Label::integer(1)}, {{1, 2}, Label::integer(1)},
                                     {{0, 2}, Label::integer(1)}}),
                    DomainError);
}

TEST_CASE("R-labelings") {
    CHECK(is_r_labeling(increasing_chain(4)).ok);
    CHECK(is_r_labeling(product_chain_labeling({2, 1, 2})).ok);

    const auto bad = is_r_labeling(labeled_b2(1, 1, 2, 2));
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.witness);
    CHECK(bad.increasing_chains == 2);
    CHECK_THROWS_AS(bs_sum(labeled_b2(1, 1, 2, 2)), DomainError);

    const auto none = is_r_labeling(labeled_b2(2, 2, 1, 1));
    CHECK_FALSE(none.ok);
    CHECK(none.increasing_chains == 0);
}

TEST_CASE("Jordan-Holder words") {
    CHECK(sorted_words(increasing_chain(4)) == std::vector<std::string>{"aaa"});
    CHECK(sorted_words(labeled_b2(1, 2, 2, 1)) == std::vector<std::string>{"a", "b"});
    CHECK(sorted_words(fan_labeling(2, 1)) == std::vector<std::string>{"a", "b"});
    CHECK(jordan_holder_set(labeled_b2(1, 2, 2, 1)).size() == 2);
    CHECK(jordan_holder_words(product_chain_labeling({1, 1, 1})).size() == 6);
}

TEST_CASE("Bjorner-Stanley sums") {
    CHECK(bs_sum(labeled_b2(1, 2, 2, 1)) == ab("a + b"));
    CHECK(bs_sum(increasing_chain(3)) == ab("aa"));
    for (unsigned r = 1; r <= 5; ++r)
        CHECK(bs_sum(fan_labeling(r, 1)) == ab("a") + ab("b") * Integer(r - 1));
    CHECK(bs_sum(product_chain_labeling({1, 1})) == ab("a + b"));
    CHECK(bs_sum(product_chain_labeling({3})) == ab("aa"));
    CHECK(bs_sum(product_chain_labeling({1, 2})) == ab("aa + ab + ba"));

    CHECK(bs_sum(signed_labeling({2})) == ab("a + b"));
    CHECK(bs_sum(signed_labeling({1})) == ab("a"));
    CHECK(abindex::theta(bs_sum(signed_labeling({2, 2}))) == qarith::pow(testsupport::poly({1, 1}), 3));

    for (const std::vector<int>& alpha : std::vector<std::vector<int>>{{2, 2}, {1, 3}, {2, 1, 1}, {1, 1, 1, 1}}) {
        const LabeledPoset lp = product_chain_labeling(alpha);
        CHECK(bs_sum(lp) == poset::ab_index(lp.poset()));
        CHECK(abindex::theta(bs_sum(lp)) == permstat::maj_distribution(alpha));
        const auto full = poset::flag_f(lp.poset());
        CHECK(Integer(jordan_holder_words(lp).size()) == full.rbegin()->second);
    }
    for (const std::vector<int>& r : std::vector<std::vector<int>>{{3}, {2, 3}, {1, 2}, {3, 1, 2}}) {
        const LabeledPoset lp = signed_labeling(r);
        CHECK(is_r_labeling(lp).ok);
        CHECK(bs_sum(lp) == poset::ab_index(lp.poset()));
        CHECK(abindex::theta(bs_sum(lp)) == permstat::signed_maj_distribution(r));
    }
}

TEST_CASE("labeled products") {
    const LabeledPoset product = labeled_cartesian_product(increasing_chain(1), increasing_chain(2));
    CHECK(product.poset().rank() == 3);
    CHECK(product.labels().size() == product.poset().covers().size());
    const LabeledPoset diamond = labeled_dual_diamond(fan_labeling(2, 1), fan_labeling(3, 2), Label::zero());
    CHECK(diamond.poset().rank() == 3);
    CHECK(diamond.label(diamond.poset().lower_covers(diamond.poset().top())[0], diamond.poset().top()) ==
          Label::zero());
    CHECK_THROWS_AS(product_chain_labeling({}), DomainError);
    CHECK_THROWS_AS(signed_labeling({0}), DomainError);
}
