#include "majordex/cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "majordex/abindex.hpp"
#include "majordex/cli/expr.hpp"
#include "majordex/error.hpp"
#include "majordex/permstat.hpp"
#include "majordex/qarith.hpp"
#include "majordex/qsym.hpp"
#include "majordex/rlabel.hpp"

namespace majordex::cli {

using abindex::AbPoly;
using abindex::AbWord;
using abindex::theta;
using qarith::QPoly;
using qarith::gaussian_binomial;
using qarith::q_factorial;
using qarith::q_int;

namespace {

// Collects cases until the first failure.
class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    // Returns false once a failure has been recorded.
    bool operator()(bool ok, const std::string& witness, const std::string& detail = {}) {
        ++result_.cases;
        if (!ok) {
            result_.ok = false;
            result_.witness = witness;
            result_.detail = detail;
        }
        return ok;
    }

    VerifyResult done(std::string detail = {}) {
        if (result_.ok) result_.detail = std::move(detail);
        return std::move(result_);
    }

private:
    VerifyResult result_;
};

std::vector<AbWord> words_of_degree(unsigned n) {
    std::vector<AbWord> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        std::string letters(n, 'a');
        for (unsigned i = 0; i < n; ++i)
            if ((bits >> i) & 1U) letters[i] = 'b';
        out.push_back(AbWord::parse(n == 0 ? "1" : letters));
    }
    std::sort(out.begin(), out.end());
    return out;
}

QPoly q_monomial(unsigned e) { return QPoly::monomial(e); }

std::string word_text(const AbWord& w) { return abindex::to_string(AbPoly(w)); }

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

VerifyResult operator_family(const std::string& name, const VerifyOptions& o,
                             const std::function<std::pair<AbPoly, QPoly>(const AbPoly&, unsigned)>& sides) {
    Check check(name);
    for (unsigned n = 0; n <= o.max_degree; ++n) {
        for (const AbWord& w : words_of_degree(n)) {
            const AbPoly p(w);
            const auto [image, expected_factor] = sides(p, n);
            const QPoly lhs = theta(image);
            const QPoly rhs = expected_factor * theta(p);
            if (!check(lhs == rhs, word_text(w), "lhs " + to_string(lhs) + " != rhs " + to_string(rhs))) {
                return check.done();
            }
        }
    }
    return check.done("all ab-words of degree <= " + std::to_string(o.max_degree));
}

VerifyResult eq2(const VerifyOptions& o) {
    return operator_family("eq2", o, [](const AbPoly& w, unsigned n) {
        return std::pair{w * AbPoly::c(), QPoly(1) + q_monomial(n + 1)};
    });
}

VerifyResult eq3(const VerifyOptions& o) {
    return operator_family("eq3", o, [](const AbPoly& w, unsigned n) {
        return std::pair{abindex::derivation_g(w), q_monomial(1) * q_int(n)};
    });
}

VerifyResult eq4(const VerifyOptions& o) {
    return operator_family("eq4", o,
                           [](const AbPoly& w, unsigned n) { return std::pair{abindex::pyr_op(w), q_int(n + 2)}; });
}

VerifyResult eq5(const VerifyOptions& o) {
    return operator_family("eq5", o, [](const AbPoly& w, unsigned n) {
        return std::pair{abindex::bipyr_op(w), q_int(2) * q_int(n + 1)};
    });
}

NamedPoset named(const std::string& expr) { return {expr, evaluate(parse_expr(expr))}; }

// Theta(Psi) of the simplex and the cross-polytope.
VerifyResult polytopes(const VerifyOptions& o) {
    Check check("polytopes");
    for (unsigned n = 0; n <= o.max_rank + 1; ++n) {
        const NamedPoset s = named("simplex(" + std::to_string(n) + ")");
        if (!check(theta(poset::ab_index(s.poset)) == q_factorial(n + 1), s.expr)) return check.done();
    }
    for (unsigned n = 1; n <= o.max_rank; ++n) {
        const NamedPoset c = named("cross(" + std::to_string(n) + ")");
        if (!check(theta(poset::ab_index(c.poset)) == qarith::pow(q_int(2), n) * q_factorial(n), c.expr))
            return check.done();
    }
    return check.done();
}

std::vector<NamedPoset> simplicial_family(unsigned max_dim) {
    std::vector<NamedPoset> out;
    for (unsigned n = 1; n <= max_dim; ++n) {
        for (unsigned i = 0; i <= n; ++i) {
            std::string e = "T(" + std::to_string(n - i) + ")";
            for (unsigned k = 0; k < i; ++k) e = "bipyr(" + e + ")";
            out.push_back(named(e));
        }
        out.push_back(named("cross(" + std::to_string(n) + ")"));
    }
    return out;
}

VerifyResult eq7(const VerifyOptions& o) {
    Check check("eq7");
    for (const NamedPoset& p : simplicial_family(o.max_rank)) {
        const unsigned n = p.poset.rank() - 1;
        const QPoly lhs = theta(poset::ab_index(p.poset));
        const QPoly rhs = q_factorial(n) * poset::h_polynomial(p.poset);
        if (!check(lhs == rhs, p.expr, "lhs " + to_string(lhs) + " != rhs " + to_string(rhs))) return check.done();
    }
    return check.done();
}

VerifyResult eq8(const VerifyOptions& o) {
    Check check("eq8");
    for (unsigned n = 1; n <= o.max_rank + 2; ++n) {
        for (unsigned i = 0; i < n; ++i) {
            const QPoly lhs = theta(abindex::expand_cd(abindex::shelling_component(n, i)));
            const QPoly rhs = q_monomial(i) * q_int(2 * (n - i)) * q_factorial(n - 1);
            if (!check(lhs == rhs, "shelling(" + std::to_string(n) + "," + std::to_string(i) + ")"))
                return check.done();
        }
    }
    // Psi(P) = sum h_i Phi(n, i) for Eulerian simplicial posets
    for (const NamedPoset& p : construction_family(o.max_rank + 1)) {
        if (p.poset.rank() < 2 || !poset::is_simplicial(p.poset) || !poset::is_eulerian(p.poset)) continue;
        const unsigned n = p.poset.rank() - 1;
        const QPoly h = poset::h_polynomial(p.poset);
        abindex::CdPoly sum;
        for (unsigned i = 0; i <= n; ++i) {
            abindex::CdPoly term = abindex::shelling_component(n, i);
            term *= h.coefficient(i);
            sum += term;
        }
        if (!check(abindex::expand_cd(sum) == poset::ab_index(p.poset), p.expr)) return check.done();
    }
    return check.done();
}

unsigned order_for(const QPoly& t, unsigned n) { return t.degree().value_or(0) + n + 4; }

bool ps_poset_check(const poset::GradedPoset& p) {
    const unsigned n = p.rank();
    const QPoly t = theta(poset::ab_index(p));
    return qsym::agrees_with(t, qsym::theta_prefactor_times(n, qsym::ps_star(qsym::f_poset(p), order_for(t, n))));
}

bool ps_bstar_poset_check(const poset::GradedPoset& p, bool dual) {
    const unsigned n = p.rank() - 1;
    const QPoly t = theta(poset::ab_index(p));
    const qsym::QSymBStarElem f = qsym::f_bstar(dual ? qsym::dual_poset(p) : p);
    return qsym::agrees_with(t, qsym::theta_prefactor_times(n, qsym::ps_bstar(f, order_for(t, n))));
}

VerifyResult specialization_family(const std::string& name, const VerifyOptions& o,
                                   const std::function<bool(const AbPoly&)>& word_check,
                                   const std::function<bool(const poset::GradedPoset&)>& poset_check) {
    Check check(name);
    for (unsigned n = 0; n <= o.max_rank + 1; ++n)
        for (const AbWord& w : words_of_degree(n))
            if (!check(word_check(AbPoly(w)), word_text(w))) return check.done();
    for (const NamedPoset& p : construction_family(o.max_rank))
        if (!check(poset_check(p.poset), p.expr)) return check.done();
    return check.done("ab-words of degree <= " + std::to_string(o.max_rank + 1) +
                      " and constructions of rank <= " + std::to_string(o.max_rank));
}

VerifyResult eq10(const VerifyOptions& o) {
    return specialization_family("eq10", o, qsym::verify_theta_via_ps, ps_poset_check);
}

VerifyResult eq13(const VerifyOptions& o) {
    return specialization_family("eq13", o, qsym::verify_theta_via_ps_bstar,
                                 [](const poset::GradedPoset& p) { return ps_bstar_poset_check(p, true); });
}

VerifyResult eq13_direct(const VerifyOptions& o) {
    return specialization_family("eq13-direct", o, qsym::verify_theta_via_ps_bstar_direct,
                                 [](const poset::GradedPoset& p) { return ps_bstar_poset_check(p, false); });
}

VerifyResult divisibility(const VerifyOptions& o) {
    Check check("divisibility");
    for (unsigned n = 0; n <= 2 * o.max_rank; ++n) {
        const QPoly d = qarith::pow(q_int(2), (n + 1) / 2);
        for (const abindex::CdWord& m : abindex::cd_words_of_weight(n))
            if (!check(qarith::divides(d, theta(abindex::expand_cd(m))), abindex::to_string(m))) return check.done();
    }
    for (const NamedPoset& p : construction_family(o.max_rank + 1)) {
        if (!poset::is_eulerian(p.poset)) continue;
        const unsigned n = p.poset.rank() - 1;
        if (!check(qarith::divides(qarith::pow(q_int(2), (n + 1) / 2), theta(poset::ab_index(p.poset))), p.expr))
            return check.done();
    }
    return check.done();
}

// B(k), chain(k) and cross(k - 1), all of rank k.
std::vector<NamedPoset> product_factors(unsigned max_rank) {
    std::vector<NamedPoset> out;
    for (unsigned k = 1; k <= max_rank; ++k) {
        out.push_back(named("B(" + std::to_string(k) + ")"));
        out.push_back(named("chain(" + std::to_string(k) + ")"));
        out.push_back(named("cross(" + std::to_string(k - 1) + ")"));
    }
    return out;
}

VerifyResult cartesian(const VerifyOptions& o) {
    Check check("cartesian");
    const unsigned limit = o.max_rank + 3;
    const auto factors = product_factors(limit - 1);
    for (const NamedPoset& p : factors) {
        for (const NamedPoset& q : factors) {
            const unsigned m = p.poset.rank(), n = q.poset.rank();
            if (m + n > limit) continue;
            const QPoly lhs = theta(poset::ab_index(poset::cartesian_product(p.poset, q.poset)));
            const QPoly rhs =
                gaussian_binomial(m + n, n) * theta(poset::ab_index(p.poset)) * theta(poset::ab_index(q.poset));
            if (!check(lhs == rhs, p.expr + " * " + q.expr)) return check.done();
        }
    }
    return check.done("pairs with combined rank <= " + std::to_string(limit));
}

VerifyResult diamond(const VerifyOptions& o) {
    Check check("diamond");
    const unsigned limit = o.max_rank + 3;
    const auto factors = product_factors(limit - 1);
    for (const NamedPoset& p : factors) {
        for (const NamedPoset& q : factors) {
            if (p.poset.rank() + q.poset.rank() > limit) continue;
            const unsigned m = p.poset.rank() - 1, n = q.poset.rank() - 1;
            const QPoly lhs = theta(poset::ab_index(poset::dual_diamond(p.poset, q.poset)));
            const QPoly rhs =
                gaussian_binomial(m + n, n) * theta(poset::ab_index(p.poset)) * theta(poset::ab_index(q.poset));
            if (!check(lhs == rhs, p.expr + " <> " + q.expr)) return check.done();
        }
    }
    return check.done("pairs with combined rank <= " + std::to_string(limit));
}

VerifyResult macmahon(const VerifyOptions& o) {
    Check check("macmahon");
    for (unsigned n = 1; n <= o.max_rank + 3; ++n) {
        for (const qsym::Composition& alpha : qsym::compositions_of(n)) {
            if (!check(permstat::maj_distribution(alpha) == qarith::gaussian_multinomial(alpha), "(" + join(alpha) + ")"))
                return check.done();
        }
    }
    return check.done("compositions of size <= " + std::to_string(o.max_rank + 3));
}

// Every r in {1..max_r}^n.
void for_each_r(unsigned n, int max_r, const std::function<bool(const std::vector<int>&)>& body) {
    std::vector<int> r(n, 1);
    while (true) {
        if (!body(r)) return;
        std::size_t i = 0;
        while (i < n && r[i] == max_r) r[i++] = 1;
        if (i == n) return;
        ++r[i];
    }
}

VerifyResult reiner(const VerifyOptions& o) {
    Check check("reiner");
    const unsigned max_n = std::min(o.max_rank, 4U);
    for (unsigned n = 1; n <= max_n; ++n) {
        bool ok = true;
        for_each_r(n, 4, [&](const std::vector<int>& r) {
            QPoly expected = q_factorial(n);
            for (int ri : r) expected *= QPoly(1) + QPoly::monomial(1, ri - 1);
            return ok = check(permstat::signed_maj_distribution(r) == expected, "r=" + join(r));
        });
        if (!ok) return check.done();
        const std::vector<int> twos(n, 2);
        if (!check(permstat::signed_maj_distribution(twos) == qarith::pow(q_int(2), n) * q_factorial(n),
                   "r=" + join(twos)))
            return check.done();
    }
    return check.done("n <= " + std::to_string(max_n) + ", r_i <= 4");
}

std::uint64_t signed_state_space(const std::vector<int>& r) {
    std::uint64_t count = 1;
    for (std::size_t i = 1; i <= r.size(); ++i) count *= i * static_cast<std::uint64_t>(r[i - 1]);
    return count;
}

bool labeling_agrees(const rlabel::LabeledPoset& lp) {
    return rlabel::is_r_labeling(lp).ok && rlabel::bs_sum(lp) == poset::ab_index(lp.poset());
}

VerifyResult bjorner_stanley(const VerifyOptions& o) {
    Check check("bjorner-stanley");
    for (unsigned n = 1; n <= o.max_rank + 2; ++n)
        for (const qsym::Composition& alpha : qsym::compositions_of(n))
            if (!check(labeling_agrees(rlabel::product_chain_labeling(alpha)), "chains(" + join(alpha) + ")"))
                return check.done();
    for (unsigned n = 1; n <= o.max_rank; ++n) {
        bool ok = true;
        for_each_r(n, 4, [&](const std::vector<int>& r) {
            if (signed_state_space(r) > 100'000) return true;
            return ok = check(labeling_agrees(rlabel::signed_labeling(r)), "signed(" + join(r) + ")");
        });
        if (!ok) return check.done();
    }
    return check.done("chain products of size <= " + std::to_string(o.max_rank + 2) +
                      ", signed labelings with n <= " + std::to_string(o.max_rank) + " and n! prod r <= 100000");
}

VerifyResult qt(const VerifyOptions& o) {
    Check check("qt");
    for (unsigned n = 1; n <= o.max_rank + 3; ++n)
        if (!check(abindex::theta_qt(poset::ab_index(poset::boolean_algebra(n))) == permstat::q_eulerian(n),
                   "B(" + std::to_string(n) + ")"))
            return check.done();
    return check.done();
}

VerifyResult carlitz(const VerifyOptions& o) {
    Check check("carlitz");
    for (unsigned n = 1; n <= o.max_rank; ++n) {
        const auto r = permstat::carlitz_check(n, 8);
        if (!check(r.ok, "n=" + std::to_string(n),
                   r.first_failing_order ? "first failing order t^" + std::to_string(*r.first_failing_order) : ""))
            return check.done();
    }
    return check.done("series truncated at t^8");
}

VerifyResult oracles(const VerifyOptions& o) {
    Check check("oracles");
    for (const NamedPoset& p : construction_family(o.max_rank + 1))
        if (!check(poset::ab_index(p.poset) == poset::ab_index_via_f(p.poset), p.expr)) return check.done();
    for (unsigned weight = 0; weight <= o.max_rank + 3; ++weight) {
        for (const abindex::CdWord& m : abindex::cd_words_of_weight(weight)) {
            const auto back = abindex::to_cd(abindex::expand_cd(m));
            if (!check(back && *back == abindex::CdPoly(m), abindex::to_string(m))) return check.done();
        }
    }
    return check.done();
}

using FamilyFn = VerifyResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, FamilyFn>>& registry() {
    static const std::vector<std::pair<std::string, FamilyFn>> families{
        {"eq2", eq2},
        {"eq3", eq3},
        {"eq4", eq4},
        {"eq5", eq5},
        {"polytopes", polytopes},
        {"eq7", eq7},
        {"eq8", eq8},
        {"divisibility", divisibility},
        {"eq10", eq10},
        {"cartesian", cartesian},
        {"eq13", eq13},
        {"eq13-direct", eq13_direct},
        {"diamond", diamond},
        {"bjorner-stanley", bjorner_stanley},
        {"macmahon", macmahon},
        {"reiner", reiner},
        {"qt", qt},
        {"carlitz", carlitz},
        {"oracles", oracles},
    };
    return families;
}

} // namespace

const std::vector<std::string>& verify_families() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_verify_family(const std::string& name) {
    const auto& names = verify_families();
    return name == "all" || std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<VerifyResult> run_verify(const std::string& name, const VerifyOptions& options) {
    std::vector<VerifyResult> out;
    for (const auto& [family, fn] : registry())
        if (name == "all" || name == family) out.push_back(fn(options));
    if (out.empty()) throw DomainError("unknown verify family \"" + name + "\"");
    return out;
}

std::vector<NamedPoset> construction_family(unsigned max_rank) {
    std::vector<std::string> exprs;
    const auto num = [](unsigned k) { return std::to_string(k); };
    for (unsigned k = 1; k <= max_rank; ++k) {
        exprs.push_back("B(" + num(k) + ")");
        exprs.push_back("chain(" + num(k) + ")");
        exprs.push_back("T(" + num(k - 1) + ")");
        exprs.push_back("cross(" + num(k - 1) + ")");
        if (k >= 2) exprs.push_back("simplex(" + num(k - 2) + ")");
    }
    exprs.push_back("fan(2)");
    exprs.push_back("fan(3)");
    for (const char* base : {"B(2)", "T(1)", "T(2)", "cross(2)", "chain(2)", "fan(3)", "pyr(T(1))", "bipyr(T(1))"}) {
        exprs.push_back(std::string("pyr(") + base + ")");
        exprs.push_back(std::string("bipyr(") + base + ")");
    }
    const char* small[] = {"B(1)", "B(2)", "chain(2)", "T(1)", "cross(1)", "fan(3)"};
    for (const char* x : small) {
        for (const char* y : small) {
            exprs.push_back(std::string(x) + " * " + y);
            exprs.push_back(std::string(x) + " <> " + y);
        }
    }

    std::vector<NamedPoset> out;
    std::set<std::string> seen;
    for (const std::string& e : exprs) {
        if (!seen.insert(e).second) continue;
        NamedPoset p = named(e);
        if (p.poset.rank() >= 1 && p.poset.rank() <= max_rank) out.push_back(std::move(p));
    }
    std::stable_sort(out.begin(), out.end(), [](const NamedPoset& a, const NamedPoset& b) {
        return a.poset.rank() != b.poset.rank() ? a.poset.rank() < b.poset.rank() : a.expr < b.expr;
    });
    return out;
}

} // namespace majordex::cli
