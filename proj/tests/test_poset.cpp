#include "doctest.h"

#include <algorithm>
#include <functional>
#include <string>

#include "majordex/abindex.hpp"
#include "majordex/error.hpp"
#include "majordex/poset.hpp"
#include "support.hpp"

using namespace majordex;
using namespace majordex::poset;
using abindex::AbPoly;
using abindex::subset_from_elements;
using qarith::QPoly;
using qarith::q_factorial;
using qarith::q_int;
using testsupport::ab;
using testsupport::poly;

namespace {

// Counts chains 0 < x_1 < ... < x_k < 1 with ranks in S by walking every
// maximal chain of ranks and checking comparability pairwise.
Integer chains_by_enumeration(const GradedPoset& p, const std::vector<int>& ranks) {
    Integer count = 0;
    std::vector<ElementId> picked;
    std::function<void(std::size_t)> pick = [&](std::size_t k) {
        if (k == ranks.size()) {
            ++count;
            return;
        }
        for (ElementId x : p.level(static_cast<unsigned>(ranks[k]))) {
            if (!picked.empty() && !p.leq(picked.back(), x)) continue;
            picked.push_back(x);
            pick(k + 1);
            picked.pop_back();
        }
    };
    pick(0);
    return count;
}

PosetErrorKind error_kind(const std::function<void()>& build) {
    try {
        build();
    } catch (const PosetError& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return PosetErrorKind::Empty;
}

std::vector<GradedPoset> sample_posets() {
    std::vector<GradedPoset> out;
    for (unsigned n = 1; n <= 4; ++n) {
        out.push_back(boolean_algebra(n));
        out.push_back(chain(n));
        out.push_back(t_poset(n));
        out.push_back(cross_polytope(n));
    }
    out.push_back(fan_poset(3));
    out.push_back(cartesian_product(chain(2), boolean_algebra(2)));
    out.push_back(dual_diamond(fan_poset(2), t_poset(2)));
    out.push_back(pyr_poset(cross_polytope(2)));
    return out;
}

} // namespace

TEST_CASE("validation") {
    const auto two_chain = GradedPoset::from_named_covers({"0", "1"}, {{"0", "1"}});
    CHECK(two_chain.rank() == 1);
    CHECK(two_chain.size() == 2);

    CHECK(error_kind([] { GradedPoset::from_named_covers({}, {}); }) == PosetErrorKind::Empty);
    CHECK(error_kind([] { GradedPoset::from_named_covers({"x", "x"}, {}); }) == PosetErrorKind::DuplicateElement);
    CHECK(error_kind([] { GradedPoset::from_named_covers({"x", "y"}, {{"x", "z"}}); }) ==
          PosetErrorKind::UnknownElement);
    CHECK(error_kind([] { GradedPoset::from_named_covers({"x"}, {{"x", "x"}}); }) == PosetErrorKind::SelfCover);
    CHECK(error_kind([] { GradedPoset::from_named_covers({"x", "y"}, {{"x", "y"}, {"x", "y"}}); }) ==
          PosetErrorKind::DuplicateCover);
    CHECK(error_kind([] { GradedPoset::from_named_covers({"x", "y"}, {{"x", "y"}, {"y", "x"}}); }) ==
          PosetErrorKind::Cycle);
    CHECK(error_kind([] { GradedPoset::from_named_covers({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}); }) ==
          PosetErrorKind::NoUniqueMaximum);
    CHECK(error_kind([] { GradedPoset::from_named_covers({"a", "b", "1"}, {{"a", "1"}, {"b", "1"}}); }) ==
          PosetErrorKind::NoUniqueMinimum);
    CHECK(error_kind([] {
              GradedPoset::from_named_covers({"0", "x", "1"}, {{"0", "x"}, {"x", "1"}, {"0", "1"}});
          }) == PosetErrorKind::NotGraded);

    try {
        GradedPoset::from_named_covers({"0", "1"}, {{"0", "2"}});
        FAIL("expected an error");
    } catch (const PosetError& e) {
        CHECK(std::string(e.what()).find("\"2\"") != std::string::npos);
        CHECK(std::string(e.code()) == "E_POSET");
    }
}

TEST_CASE("flag vectors") {
    const FlagVector b2 = flag_f(boolean_algebra(2));
    CHECK(b2.at(0) == 1);
    CHECK(b2.at(subset_from_elements({1})) == 2);
    const FlagVector b3 = flag_f(boolean_algebra(3));
    CHECK(b3.at(subset_from_elements({1, 2})) == 6);
    for (const auto& [s, f] : flag_f(chain(5))) CHECK(f == 1);

    const FlagVector h2 = flag_h(b2);
    CHECK(h2.at(0) == 1);
    CHECK(h2.at(subset_from_elements({1})) == 1);
    for (const auto& [s, h] : flag_h(flag_f(chain(4)))) CHECK(h == (s == 0 ? 1 : 0));
    CHECK(flag_h(b3).at(subset_from_elements({1, 2})) == 1);

    for (const GradedPoset& p : sample_posets()) {
        const FlagVector f = flag_f(p);
        CHECK(f.size() == (std::size_t{1} << (p.rank() - 1)));
        CHECK(flag_f_from_h(flag_h(f)) == f);
        for (const auto& [s, count] : f) CHECK(count == chains_by_enumeration(p, abindex::subset_elements(s)));
    }
}

TEST_CASE("ab-index") {
    CHECK(ab_index(boolean_algebra(1)) == ab("1"));
    CHECK(ab_index(boolean_algebra(3)) == ab("aa + 2*ab + 2*ba + bb"));
    for (unsigned r = 1; r <= 5; ++r) CHECK(ab_index(fan_poset(r)) == ab("a") + ab("b") * Integer(r - 1));
    CHECK_THROWS_AS(ab_index(chain(0)), DomainError);
    for (const GradedPoset& p : sample_posets()) CHECK(ab_index(p) == ab_index_via_f(p));
}

TEST_CASE("Mobius function and Eulerian posets") {
    const GradedPoset b2 = boolean_algebra(2);
    CHECK(mobius(b2, b2.bottom(), b2.top()) == 1);
    for (ElementId x = 0; x < b2.size(); ++x) CHECK(mobius(b2, x, x) == 1);
    const GradedPoset c3 = chain(3);
    CHECK(mobius(c3, c3.bottom(), c3.top()) == 0);
    const auto atoms = b2.level(1);
    CHECK_THROWS_AS(mobius(b2, atoms[0], atoms[1]), DomainError);

    for (unsigned n = 0; n <= 5; ++n) CHECK(is_eulerian(boolean_algebra(n)));
    for (unsigned n = 1; n <= 4; ++n) CHECK(is_eulerian(cross_polytope(n)));
    CHECK_FALSE(is_eulerian(t_poset(2)));
    CHECK_FALSE(is_eulerian(chain(2)));
    CHECK(is_eulerian(fan_poset(2)));
    CHECK_FALSE(is_eulerian(fan_poset(3)));
}

TEST_CASE("simplicial posets and h-polynomials") {
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(is_simplicial(t_poset(n)));
        CHECK(is_simplicial(boolean_algebra(n)));
        CHECK(h_polynomial(t_poset(n)) == QPoly(1));
    }
    CHECK(is_simplicial(cross_polytope(2)));
    CHECK_FALSE(is_simplicial(pyr_poset(cross_polytope(2))));
    CHECK_THROWS_AS(h_polynomial(pyr_poset(cross_polytope(2))), DomainError);
    CHECK(h_polynomial(cross_polytope(2)) == poly({1, 2, 1}));
    CHECK(f_vector(cross_polytope(2)) == std::vector<Integer>{1, 4, 4});

    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned i = 0; i <= n; ++i) {
            GradedPoset p = t_poset(n - i);
            for (unsigned k = 0; k < i; ++k) p = bipyr_poset(p);
            CHECK(is_simplicial(p));
            CHECK(h_polynomial(p) == qarith::pow(poly({1, 1}), i));
            CHECK(h_polynomial(bipyr_poset(p)) == poly({1, 1}) * h_polynomial(p));
        }
    }
    // Eulerian simplicial posets have palindromic h-polynomials
    for (unsigned n = 1; n <= 5; ++n) {
        const auto coeffs = h_polynomial(cross_polytope(n)).dense();
        CHECK(std::equal(coeffs.begin(), coeffs.end(), coeffs.rbegin()));
    }
}

TEST_CASE("products") {
    CHECK(flag_f(cartesian_product(boolean_algebra(1), boolean_algebra(1))) == flag_f(boolean_algebra(2)));
    CHECK(cartesian_product(chain(2), boolean_algebra(3)).rank() == 5);
    CHECK(ab_index(pyr_poset(boolean_algebra(2))) == abindex::pyr_op(ab_index(boolean_algebra(2))));

    CHECK(flag_f(dual_diamond(boolean_algebra(2), boolean_algebra(2))) == flag_f(cross_polytope(2)));
    CHECK(dual_diamond(chain(3), boolean_algebra(2)).rank() == 4);
    CHECK(ab_index(bipyr_poset(boolean_algebra(2))) == abindex::bipyr_op(ab_index(boolean_algebra(2))));
    CHECK_THROWS_AS(dual_diamond(chain(0), chain(2)), DomainError);

    for (const GradedPoset& p : sample_posets()) {
        if (p.rank() > 4) continue;
        CHECK(ab_index(pyr_poset(p)) == abindex::pyr_op(ab_index(p)));
        CHECK(ab_index(bipyr_poset(p)) == abindex::bipyr_op(ab_index(p)));
    }

    const GradedPoset square = cartesian_product(chain(1), chain(1));
    CHECK(square.name(0) == "(0,0)");
    CHECK(square.name(3) == "(1,1)");
}

TEST_CASE("standard constructions") {
    CHECK(boolean_algebra(0).size() == 1);
    CHECK(boolean_algebra(3).size() == 8);
    CHECK(chain(4).size() == 5);
    CHECK(t_poset(2).size() == 5);
    CHECK(simplex_lattice(2).size() == 8);
    CHECK(cross_polytope(3).size() == 28);
    CHECK(cross_polytope(3).rank() == 4);
    CHECK(fan_poset(3).size() == 5);
    CHECK_THROWS_AS(fan_poset(0), DomainError);
    CHECK(flag_f(cross_polytope(2)) == flag_f(bipyr_poset(boolean_algebra(2))));

    for (unsigned n = 0; n <= 5; ++n)
        CHECK(abindex::theta(ab_index(simplex_lattice(n))) == q_factorial(n + 1));
    for (unsigned n = 1; n <= 4; ++n)
        CHECK(abindex::theta(ab_index(cross_polytope(n))) == qarith::pow(q_int(2), n) * q_factorial(n));
}

TEST_CASE("intervals and duals") {
    const GradedPoset b3 = boolean_algebra(3);
    const ElementId atom = b3.level(1)[0];
    const GradedPoset upper = b3.interval(atom, b3.top());
    CHECK(upper.rank() == 2);
    CHECK(flag_f(upper) == flag_f(boolean_algebra(2)));
    CHECK(b3.interval_elements(b3.bottom(), b3.top()).size() == 8);

    const GradedPoset tp = t_poset(2);
    const GradedPoset dual = tp.dual();
    CHECK(dual.rank() == tp.rank());
    CHECK(ab_index(dual) == abindex::reverse(ab_index(tp)));
}
