#include "majordex/qsym.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "majordex/error.hpp"

namespace majordex::qsym {

using abindex::AbPoly;
using abindex::AbWord;
using abindex::SubsetMask;
using qarith::QPoly;
using qarith::QSeries;

Composition comp_of_set(SubsetMask s, unsigned n) {
    if (n == 0) throw DomainError("comp_of_set: n must be positive");
    if (n < 64 && (s >> (n - 1)) != 0) throw DomainError("comp_of_set: set is not contained in {1..n-1}");
    Composition out;
    int last = 0;
    for (int i : abindex::subset_elements(s)) {
        out.push_back(i - last);
        last = i;
    }
    out.push_back(static_cast<int>(n) - last);
    return out;
}

SubsetMask set_of_comp(const Composition& alpha) {
    SubsetMask s = 0;
    int partial = 0;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (alpha[k] < 1) throw DomainError("set_of_comp: parts must be positive");
        partial += alpha[k];
        if (k + 1 < alpha.size()) {
            if (partial > 64) throw DomainError("set_of_comp: composition too large");
            s |= SubsetMask{1} << (partial - 1);
        }
    }
    return s;
}

Composition reverse_comp(const Composition& alpha) { return Composition(alpha.rbegin(), alpha.rend()); }

int comp_size(const Composition& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

std::vector<Composition> compositions_of(unsigned n) {
    if (n == 0) return {};
    if (n > 30) throw BoundError("compositions_of: n too large");
    std::vector<Composition> out;
    for (SubsetMask s = 0; s < (SubsetMask{1} << (n - 1)); ++s) out.push_back(comp_of_set(s, n));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- rendering

std::string to_string(const Composition& alpha) {
    std::string out = "(";
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(alpha[k]);
    }
    return out + ")";
}

namespace {

template <class Elem, class Render>
std::string render(const Elem& x, Render basis_name) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : x) {
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const std::string name = basis_name(key);
        if (name.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << name;
        }
    }
    return os.str();
}

std::string monomial_name(const Composition& alpha) { return alpha.empty() ? std::string() : "M" + to_string(alpha); }

} // namespace

std::string to_string(const QSymElem& x) { return render(x, monomial_name); }

std::string to_string(const QSymBStarElem& x) {
    return render(x, [](const BStarKey& key) {
        std::string name = monomial_name(key.first);
        if (key.second == 0) return name;
        std::string s = key.second == 1 ? "s" : "s^" + std::to_string(key.second);
        return name.empty() ? s : name + "*" + s;
    });
}

std::ostream& operator<<(std::ostream& os, const QSymElem& x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, const QSymBStarElem& x) { return os << to_string(x); }

QSymElem reverse(const QSymElem& x) {
    QSymElem out;
    for (const auto& [alpha, c] : x) out.add_term(reverse_comp(alpha), c);
    return out;
}

// ---------------------------------------------------------------- gamma maps

namespace {

// Coefficients of w in the basis v_S (b at S, a - b elsewhere). u_S = v_S +
// (terms with more b's), so solving in order of increasing b-count is
// unitriangular.
std::map<SubsetMask, Integer> v_coordinates(const AbPoly& w, unsigned n) {
    AbPoly rest = w;
    std::map<SubsetMask, Integer> out;
    while (!rest.is_zero()) {
        auto pivot = std::min_element(rest.begin(), rest.end(), [](const auto& x, const auto& y) {
            if (x.first.b_count() != y.first.b_count()) return x.first.b_count() < y.first.b_count();
            return x.first < y.first;
        });
        const SubsetMask s = pivot->first.bits();
        const Integer c = pivot->second;
        AbPoly v = abindex::vpoly_of_set(s, n);
        if (v.coefficient(pivot->first) != 1) throw InternalError("v-basis change is not unitriangular");
        out[s] = c;
        rest -= v * c;
    }
    return out;
}

unsigned checked_degree(const AbPoly& w, const char* who) {
    auto degree = w.homogeneous_degree();
    if (!degree) throw DomainError(std::string(who) + ": input is not homogeneous");
    return *degree;
}

} // namespace

QSymElem gamma(const AbPoly& w) {
    if (w.is_zero()) return {};
    const unsigned n = checked_degree(w, "gamma") + 1;
    QSymElem out;
    for (const auto& [s, c] : v_coordinates(w, n - 1)) out.add_term(comp_of_set(s, n), c);
    return out;
}

QSymBStarElem gamma_bstar(const AbPoly& w) {
    if (w.is_zero()) return {};
    const unsigned n = checked_degree(w, "gamma_bstar");
    QSymBStarElem out;
    for (const auto& [s, c] : v_coordinates(w, n)) {
        Composition alpha;
        int last = 0;
        for (int i : abindex::subset_elements(s)) {
            alpha.push_back(i - last);
            last = i;
        }
        out.add_term({alpha, n - static_cast<unsigned>(last)}, c);
    }
    return out;
}

QSymElem fundamental_expand(const Composition& alpha) {
    const int n = comp_size(alpha);
    if (alpha.empty() || n < 1) throw DomainError("fundamental_expand: empty composition");
    const SubsetMask base = set_of_comp(alpha);
    const SubsetMask full = (SubsetMask{1} << (n - 1)) - 1;
    const SubsetMask free = full & ~base;
    QSymElem out;
    // walk all subsets of `free`
    SubsetMask extra = 0;
    do {
        out.add_term(comp_of_set(base | extra, static_cast<unsigned>(n)), 1);
        extra = (extra - free) & free;
    } while (extra != 0);
    return out;
}

// ---------------------------------------------------------------- products

namespace {

using ShuffleCache = std::map<std::pair<Composition, Composition>, QSymElem>;

const QSymElem& quasi_shuffle_basis(const Composition& alpha, const Composition& beta, ShuffleCache& cache) {
    auto key = std::make_pair(alpha, beta);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    QSymElem out;
    if (alpha.empty()) {
        out.add_term(beta, 1);
    } else if (beta.empty()) {
        out.add_term(alpha, 1);
    } else {
        // The last part of the result comes from alpha, from beta, or from both merged.
        Composition a_rest(alpha.begin(), alpha.end() - 1);
        Composition b_rest(beta.begin(), beta.end() - 1);
        auto append = [&](const QSymElem& prefix, int part) {
            for (const auto& [gamma, c] : prefix) {
                Composition extended = gamma;
                extended.push_back(part);
                out.add_term(extended, c);
            }
        };
        append(quasi_shuffle_basis(a_rest, beta, cache), alpha.back());
        append(quasi_shuffle_basis(alpha, b_rest, cache), beta.back());
        append(quasi_shuffle_basis(a_rest, b_rest, cache), alpha.back() + beta.back());
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

} // namespace

QSymElem quasi_shuffle(const QSymElem& x, const QSymElem& y) {
    ShuffleCache cache;
    QSymElem out;
    for (const auto& [alpha, c1] : x)
        for (const auto& [beta, c2] : y) out += quasi_shuffle_basis(alpha, beta, cache) * (c1 * c2);
    return out;
}

QSymBStarElem product(const QSymBStarElem& x, const QSymBStarElem& y) {
    ShuffleCache cache;
    QSymBStarElem out;
    for (const auto& [k1, c1] : x)
        for (const auto& [k2, c2] : y)
            for (const auto& [gamma, c] : quasi_shuffle_basis(k1.first, k2.first, cache))
                out.add_term({gamma, k1.second + k2.second}, c * c1 * c2);
    return out;
}

// ---------------------------------------------------------------- specializations

namespace {

// Adds sum over 0 <= e_1 < e_2 < ... of q^(sum alpha_j e_j) into `out`,
// skipping any tuple whose smallest possible total exceeds the order.
void accumulate_monomial(const Composition& alpha, std::size_t j, unsigned lowest, unsigned partial,
                         const Integer& coeff, QSeries& out) {
    const unsigned order = out.order();
    // smallest contribution of parts j.. when part j sits at exponent e
    auto tail_min = [&](unsigned e) {
        unsigned long long sum = 0;
        for (std::size_t l = j; l < alpha.size(); ++l)
            sum += static_cast<unsigned long long>(alpha[l]) * (e + (l - j));
        return sum;
    };
    for (unsigned e = lowest;; ++e) {
        if (partial + tail_min(e) > order) return;
        const unsigned next = partial + static_cast<unsigned>(alpha[j]) * e;
        if (j + 1 == alpha.size()) {
            out.add_to(next, coeff);
        } else {
            accumulate_monomial(alpha, j + 1, e + 1, next, coeff, out);
        }
    }
}

} // namespace

QSeries ps(const QSymElem& x, unsigned order) {
    QSeries out(order);
    for (const auto& [alpha, c] : x) {
        if (alpha.empty()) {
            out.add_to(0, c);
        } else {
            accumulate_monomial(alpha, 0, 0, 0, c, out);
        }
    }
    return out;
}

QSeries ps_star(const QSymElem& x, unsigned order) { return ps(reverse(x), order); }

QSeries ps_bstar(const QSymBStarElem& x, unsigned order) {
    // group by deg f so that each q-shift is applied once
    std::map<int, QSymElem> by_degree;
    for (const auto& [key, c] : x) by_degree[comp_size(key.first)].add_term(key.first, c);
    QSeries out(order);
    for (const auto& [deg, f] : by_degree) {
        if (static_cast<unsigned>(deg) > order) continue;
        out += QPoly::monomial(static_cast<unsigned>(deg)) * ps_star(f, order);
    }
    return out;
}

// ---------------------------------------------------------------- posets

QSymElem f_poset(const poset::GradedPoset& p) { return gamma(poset::ab_index(p)); }

MultiPoly f_poset_multichain(const poset::GradedPoset& p, unsigned k) {
    // partial[x]: sum over multichains 0 = x_0 <= ... <= x_j = x
    std::vector<MultiPoly> partial(p.size());
    partial[p.bottom()].add_term(std::vector<unsigned>{}, 1);
    for (unsigned j = 0; j < k; ++j) {
        std::vector<MultiPoly> next(p.size());
        for (poset::ElementId x = 0; x < p.size(); ++x) {
            if (partial[x].is_zero()) continue;
            for (poset::ElementId y = 0; y < p.size(); ++y) {
                if (!p.leq(x, y)) continue;
                const unsigned step = p.rank_of(y) - p.rank_of(x);
                for (const auto& [exps, c] : partial[x]) {
                    auto extended = exps;
                    extended.push_back(step);
                    next[y].add_term(extended, c);
                }
            }
        }
        partial = std::move(next);
    }
    return partial[p.top()];
}

MultiPoly restrict_to_variables(const QSymElem& x, unsigned k) {
    MultiPoly out;
    for (const auto& [alpha, c] : x) {
        if (alpha.size() > k) continue;
        // choose positions i_1 < ... < i_l in {0..k-1}
        std::vector<bool> pick(k, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(alpha.size()), true);
        do {
            std::vector<unsigned> exps(k, 0);
            std::size_t part = 0;
            for (unsigned i = 0; i < k; ++i)
                if (pick[i]) exps[i] = static_cast<unsigned>(alpha[part++]);
            out.add_term(exps, c);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

QSymBStarElem f_bstar(const poset::GradedPoset& p) {
    QSymBStarElem out;
    for (poset::ElementId x = 0; x < p.size(); ++x) {
        if (x == p.top()) continue;
        const unsigned power = p.rank() - p.rank_of(x) - 1;
        if (x == p.bottom()) {
            out.add_term({Composition{}, power}, 1);
            continue;
        }
        for (const auto& [alpha, c] : f_poset(p.interval(p.bottom(), x))) out.add_term({alpha, power}, c);
    }
    return out;
}

poset::GradedPoset dual_poset(const poset::GradedPoset& p) { return p.dual(); }

// ---------------------------------------------------------------- Theta checks

QSeries theta_prefactor_times(unsigned n, const QSeries& series) {
    const QPoly prefactor = qarith::pow(QPoly(1) - QPoly::monomial(1), n) * qarith::q_factorial(n);
    return prefactor * series;
}

bool agrees_with(const QPoly& theta, const QSeries& series) {
    const auto degree = theta.degree();
    if (degree && *degree > series.order()) return false;
    for (unsigned e = 0; e <= series.order(); ++e)
        if (theta.coefficient(e) != series.coefficient(e)) return false;
    return true;
}

namespace {

unsigned truncation_order(const QPoly& theta, unsigned n) { return theta.degree().value_or(0) + n + 4; }

} // namespace

bool verify_theta_via_ps(const AbPoly& w) {
    if (w.is_zero()) return true;
    const unsigned n = checked_degree(w, "verify_theta_via_ps") + 1;
    const QPoly theta = abindex::theta(w);
    const unsigned order = truncation_order(theta, n);
    return agrees_with(theta, theta_prefactor_times(n, ps_star(gamma(w), order)));
}

namespace {

bool check_theta_via_ps_bstar(const AbPoly& w, bool reversed) {
    if (w.is_zero()) return true;
    const unsigned n = checked_degree(w, "verify_theta_via_ps_bstar");
    const QPoly theta = abindex::theta(w);
    const unsigned order = truncation_order(theta, n);
    const QSymBStarElem image = gamma_bstar(reversed ? abindex::reverse(w) : w);
    return agrees_with(theta, theta_prefactor_times(n, ps_bstar(image, order)));
}

} // namespace

bool verify_theta_via_ps_bstar(const AbPoly& w) { return check_theta_via_ps_bstar(w, true); }

bool verify_theta_via_ps_bstar_direct(const AbPoly& w) { return check_theta_via_ps_bstar(w, false); }

} // namespace majordex::qsym
