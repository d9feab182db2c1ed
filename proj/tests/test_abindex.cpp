#include "doctest.h"

#include "majordex/abindex.hpp"
#include "majordex/error.hpp"
#include "majordex/poset.hpp"
#include "support.hpp"

using namespace majordex;
using namespace majordex::abindex;
using qarith::QPoly;
using qarith::q_factorial;
using qarith::q_int;
using testsupport::ab;
using testsupport::poly;
using testsupport::q_pow;

namespace {

// Theta straight from the definition: product of q^i over positions i holding b.
QPoly theta_by_letters(const AbPoly& p) {
    QPoly out;
    for (const auto& [w, c] : p) {
        const std::string letters = to_string(AbPoly(w));
        unsigned e = 0;
        for (std::size_t i = 0; i < letters.size(); ++i)
            if (letters[i] == 'b') e += static_cast<unsigned>(i) + 1;
        out += QPoly::monomial(e, c);
    }
    return out;
}

// Leibniz rule written out letter by letter on strings.
AbPoly derivation_by_letters(const AbPoly& p, const char* image_a, const char* image_b) {
    AbPoly out;
    for (const auto& [w, c] : p) {
        std::string letters = w.length() == 0 ? "" : to_string(AbPoly(w));
        for (std::size_t i = 0; i < letters.size(); ++i) {
            const AbPoly left = AbPoly::parse(i == 0 ? "1" : letters.substr(0, i));
            const AbPoly right = AbPoly::parse(i + 1 == letters.size() ? "1" : letters.substr(i + 1));
            out += left * AbPoly::parse(letters[i] == 'a' ? image_a : image_b) * right * c;
        }
    }
    return out;
}

} // namespace

TEST_CASE("words and parsing") {
    const AbWord w = AbWord::parse("abba");
    CHECK(w.length() == 4);
    CHECK(w.b_count() == 2);
    CHECK(w.b_position_sum() == 5);
    CHECK(w.is_b(2));
    CHECK_FALSE(w.is_b(1));
    CHECK(to_string(AbPoly(w.reversed())) == "abba");
    CHECK(to_string(AbPoly(AbWord::parse("1"))) == "1");
    CHECK(AbWord::parse("ab") < AbWord::parse("ba"));
    CHECK(AbWord::parse("b") < AbWord::parse("aa"));
    CHECK_THROWS_AS(AbWord::parse("abc"), DomainError);

    CHECK(to_string(ab("ab + 2*aa")) == "2*aa + ab");
    CHECK(to_string(ab("ba - ba")) == "0");
    CHECK(to_string(ab("-b + 3")) == "3 - b");
    CHECK_THROWS_AS(ab("a +"), DomainError);
    CHECK_THROWS_AS(ab("2**a"), DomainError);
}

TEST_CASE("Major MacMahon map") {
    CHECK(theta(ab("abba")) == q_pow(5));
    CHECK(theta(ab("1")) == QPoly(1));
    CHECK(theta(ab("aab + ba")) == poly({0, 1, 0, 1}));
    CHECK(theta(AbPoly()).is_zero());

    CHECK(theta_qt(ab("abba")) == qarith::QTPoly::monomial(5, 2));
    CHECK(theta_qt(ab("aaaa")) == qarith::QTPoly::monomial(0, 0));
    CHECK(theta_qt(ab("a + b")) == qarith::QTPoly::monomial(0, 0) + qarith::QTPoly::monomial(1, 1));

    for (int trial = 0; trial < 200; ++trial) {
        const AbPoly p = testsupport::random_homogeneous(static_cast<unsigned>(testsupport::uniform(0, 9)));
        const AbPoly r = testsupport::random_homogeneous(static_cast<unsigned>(testsupport::uniform(0, 9)));
        CHECK(theta(p) == theta_by_letters(p));
        CHECK(theta(p + r) == theta(p) + theta(r));
        CHECK(theta_qt(p).at_t_one() == theta(p));
    }
}

TEST_CASE("derivations") {
    CHECK(derivation_g(ab("a")) == ab("ba"));
    CHECK(derivation_g(ab("b")) == ab("ab"));
    CHECK(derivation_g(ab("1")).is_zero());
    CHECK(derivation_d(ab("1")).is_zero());
    CHECK(derivation_g(ab("ab")) == ab("bab + aab"));
    CHECK(derivation_d(ab("a")) == ab("ab + ba"));

    CHECK(pyr_op(ab("1")) == ab("a + b"));
    CHECK(bipyr_op(ab("1")) == ab("a + b"));
    CHECK(pyr_op(ab("a")) == ab("ba + aa + ab"));

    for (int trial = 0; trial < 100; ++trial) {
        const AbPoly u = testsupport::random_homogeneous(static_cast<unsigned>(testsupport::uniform(0, 5)));
        const AbPoly v = testsupport::random_homogeneous(static_cast<unsigned>(testsupport::uniform(0, 5)));
        CHECK(derivation_g(u * v) == derivation_g(u) * v + u * derivation_g(v));
        CHECK(derivation_d(u * v) == derivation_d(u) * v + u * derivation_d(v));
        CHECK(derivation_g(u) == derivation_by_letters(u, "ba", "ab"));
        CHECK(derivation_d(u) == derivation_by_letters(u, "ab + ba", "ab + ba"));
    }
}

TEST_CASE("operator identities on random polynomials") {
    for (unsigned n = 0; n <= 8; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            const AbPoly w = testsupport::random_homogeneous(n);
            const QPoly t = theta(w);
            CHECK(theta(w * AbPoly::c()) == (QPoly(1) + q_pow(n + 1)) * t);
            CHECK(theta(derivation_g(w)) == q_pow(1) * q_int(n) * t);
            CHECK(theta(pyr_op(w)) == q_int(n + 2) * t);
            CHECK(theta(bipyr_op(w)) == q_int(2) * q_int(n + 1) * t);
        }
    }
    // theta(c w) = q^k [2] theta(w) for a word w with k b's
    for (int trial = 0; trial < 100; ++trial) {
        const AbWord w = testsupport::random_word(static_cast<unsigned>(testsupport::uniform(0, 10)));
        CHECK(theta(AbPoly::c() * AbPoly(w)) == q_pow(w.b_count()) * q_int(2) * theta(AbPoly(w)));
    }
}

TEST_CASE("cd-polynomials") {
    CHECK(expand_cd(CdPoly::parse("c")) == ab("a + b"));
    CHECK(expand_cd(CdPoly::parse("d")) == ab("ab + ba"));
    CHECK(expand_cd(CdPoly::parse("cc + d")) == ab("aa + 2*ab + 2*ba + bb"));
    CHECK(CdWord("ccd").weight() == 4);
    CHECK_THROWS_AS(CdWord("cx"), DomainError);
    CHECK(to_string(CdPoly::parse("d + 2*cc")) == "2*cc + d");

    CHECK(cd_words_of_weight(0).size() == 1);
    CHECK(cd_words_of_weight(4).size() == 5);
    CHECK(cd_words_of_weight(10).size() == 89);

    auto c = to_cd(ab("a + b"));
    REQUIRE(c);
    CHECK(*c == CdPoly::parse("c"));
    auto ccd = to_cd(ab("aa + 2*ab + 2*ba + bb"));
    REQUIRE(ccd);
    CHECK(*ccd == CdPoly::parse("cc + d"));
    CHECK_FALSE(to_cd(ab("a")));
    CHECK(to_cd(AbPoly()) == CdPoly());
    CHECK_THROWS_AS(to_cd(ab("a + bb")), DomainError);

    for (unsigned weight = 0; weight <= 8; ++weight) {
        for (const CdWord& w : cd_words_of_weight(weight)) {
            auto back = to_cd(expand_cd(w));
            REQUIRE(back);
            CHECK(*back == CdPoly(w));
        }
    }
}

TEST_CASE("reversal and subsets") {
    CHECK(reverse(ab("abb")) == ab("bba"));
    CHECK(reverse(ab("aab + ba")) == ab("baa + ab"));
    for (int trial = 0; trial < 50; ++trial) {
        const AbPoly p = testsupport::random_homogeneous(static_cast<unsigned>(testsupport::uniform(0, 9)));
        CHECK(reverse(reverse(p)) == p);
    }

    CHECK(word_of_set(std::vector<int>{2, 3}, 4) == AbWord::parse("abba"));
    CHECK(word_of_set(std::vector<int>{}, 3) == AbWord::parse("aaa"));
    CHECK(vpoly_of_set(subset_from_elements({1}), 2) == ab("ba - bb"));
    CHECK(set_of_word(AbWord::parse("abba")) == std::vector<int>{2, 3});
    CHECK_THROWS_AS(word_of_set(std::vector<int>{4}, 3), DomainError);
    CHECK_THROWS_AS(word_of_set(std::vector<int>{0}, 3), DomainError);
    for (unsigned n = 0; n <= 6; ++n)
        for (const AbWord& w : testsupport::all_words(n)) CHECK(word_of_set(set_of_word(w), n) == w);
}

TEST_CASE("shelling components") {
    CHECK(shelling_component(1, 0) == CdPoly::parse("c"));
    CHECK(shelling_component(2, 1) == CdPoly::parse("d"));
    CHECK(theta(expand_cd(shelling_component(2, 1))) == poly({0, 1, 1}));
    CHECK(shelling_component(3, 3).is_zero());
    CHECK_THROWS_AS(shelling_component(0, 0), DomainError);
    CHECK_THROWS_AS(shelling_component(2, 3), DomainError);

    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned i = 0; i < n; ++i)
            CHECK(theta(expand_cd(shelling_component(n, i))) ==
                  q_pow(i) * q_int(2 * (n - i)) * q_factorial(n - 1));
}
