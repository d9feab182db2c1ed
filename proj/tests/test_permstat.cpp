#include "doctest.h"

#include <cstdlib>
#include <set>

#include "majordex/abindex.hpp"
#include "majordex/error.hpp"
#include "majordex/permstat.hpp"
#include "majordex/poset.hpp"
#include "support.hpp"

using namespace majordex;
using namespace majordex::permstat;
using qarith::QPoly;
using qarith::QTPoly;
using testsupport::poly;

TEST_CASE("descent statistics") {
    const std::vector<int> pi{3, 1, 2};
    CHECK(descent_set(pi) == std::vector<int>{1});
    CHECK(maj(pi) == 1);
    CHECK(des(pi) == 1);
    CHECK(descent_word(pi) == abindex::AbWord::parse("ba"));

    const std::vector<int> id{1, 2, 3, 4};
    CHECK(descent_set(id).empty());
    CHECK(maj(id) == 0);
    CHECK(descent_word(id) == abindex::AbWord::parse("aaa"));

    const std::vector<int> multiset{2, 2, 1};
    CHECK(descent_set(multiset) == std::vector<int>{2});
    CHECK(maj(multiset) == 2);
    CHECK_THROWS_AS(descent_word({}), DomainError);
}

TEST_CASE("multiset permutations") {
    CHECK(maj_distribution({1, 2}) == poly({1, 1, 1}));
    CHECK(maj_distribution({4}) == QPoly(1));
    CHECK(maj_distribution({1, 1, 1}) == poly({1, 2, 2, 1}));

    std::set<std::vector<int>> seen;
    MultisetPermutations perms({2, 1, 1});
    while (const auto* p = perms.next()) CHECK(seen.insert(*p).second);
    CHECK(seen.size() == 12);
    CHECK(perms.next() == nullptr);

    CHECK_THROWS_AS(MultisetPermutations({}), DomainError);
    CHECK_THROWS_AS(MultisetPermutations({2, 0}), DomainError);
    CHECK_THROWS_AS(maj_distribution({6, 5}), BoundError);
    EnumerationLimits wide;
    wide.max_multiset_length = 11;
    CHECK(maj_distribution({10, 1}, wide) == qarith::q_int(11));

    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> alpha(static_cast<std::size_t>(testsupport::uniform(1, 4)));
        for (int& part : alpha) part = testsupport::uniform(1, 2);
        CHECK(maj_distribution(alpha) == qarith::gaussian_multinomial(alpha));
    }
}

TEST_CASE("signed permutations") {
    CHECK(signed_maj_distribution({2}) == poly({1, 1}));
    CHECK(signed_maj_distribution({1, 1}) == poly({1, 1}));
    CHECK(signed_maj_distribution({2, 2}) == qarith::pow(poly({1, 1}), 3));

    SignedPermutations perms({2, 3});
    CHECK(perms.count() == 12);
    std::size_t total = 0;
    std::set<std::vector<std::pair<int, int>>> seen;
    while (const auto* sigma = perms.next()) {
        ++total;
        REQUIRE(sigma->size() == 3);
        CHECK(sigma->back().sentinel);
        std::vector<std::pair<int, int>> key;
        for (std::size_t k = 0; k + 1 < sigma->size(); ++k) {
            const auto& letter = (*sigma)[k];
            const int r = letter.value == 1 ? 2 : 3;
            CHECK((letter.sign == -1 || (letter.sign >= 2 && letter.sign <= r)));
            key.emplace_back(letter.sign, letter.value);
        }
        CHECK(seen.insert(key).second);
    }
    CHECK(total == 12);

    CHECK(compare(SignedLetter::zero(), SignedLetter{false, 2, 1}) < 0);
    CHECK(compare(SignedLetter{false, -1, 5}, SignedLetter::zero()) < 0);
    CHECK(compare(SignedLetter{false, -1, 5}, SignedLetter{false, 2, 1}) < 0);
    CHECK(compare(SignedLetter{false, 2, 1}, SignedLetter{false, 2, 3}) < 0);

    EnumerationLimits tight;
    tight.max_signed_count = 10;
    CHECK_THROWS_AS(SignedPermutations({2, 3}, tight), BoundError);
    CHECK_THROWS_AS(SignedPermutations({}), DomainError);

    for (const std::vector<int>& r : std::vector<std::vector<int>>{{3}, {2, 3}, {4, 1, 2}, {2, 2, 2}}) {
        QPoly expected = qarith::q_factorial(static_cast<unsigned>(r.size()));
        for (int ri : r) expected *= QPoly(1) + QPoly::monomial(1, ri - 1);
        CHECK(signed_maj_distribution(r) == expected);
    }
}

TEST_CASE("q-Eulerian polynomials") {
    CHECK(q_eulerian(1) == QTPoly::monomial(0, 0));
    CHECK(q_eulerian(2) == QTPoly::monomial(0, 0) + QTPoly::monomial(1, 1));
    CHECK(q_eulerian(3).at_q_one() == poly({1, 4, 1}));
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(q_eulerian(n).at_t_one() == qarith::q_factorial(n));
        CHECK(q_eulerian(n) == abindex::theta_qt(poset::ab_index(poset::boolean_algebra(n))));
    }
    CHECK_THROWS_AS(q_eulerian(10), BoundError);
}

TEST_CASE("Carlitz identity") {
    CHECK(carlitz_check(1, 3).ok);
    CHECK(carlitz_check(0, 2).ok);
    CHECK(carlitz_check(2, 4).ok);
    for (unsigned n = 3; n <= 5; ++n) CHECK(carlitz_check(n, 6).ok);
}

TEST_CASE("enumeration bound from the environment") {
    ::setenv("MAJORDEX_MAX_ENUM", "12", 1);
    CHECK(EnumerationLimits::from_environment().max_multiset_length == 12);
    CHECK(EnumerationLimits::from_environment().max_eulerian_length == 12);
    ::setenv("MAJORDEX_MAX_ENUM", "junk", 1);
    CHECK(EnumerationLimits::from_environment().max_multiset_length == 10);
    ::unsetenv("MAJORDEX_MAX_ENUM");
    CHECK(EnumerationLimits::from_environment().max_eulerian_length == 9);
}
