#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "majordex/abindex.hpp"
#include "majordex/linear_combination.hpp"
#include "majordex/poset.hpp"
#include "majordex/qarith.hpp"

// Quasi-symmetric functions in the monomial basis, the type B* extension
// M_alpha * s^p, the gamma maps from ab-polynomials, and the stable
// principal specializations used to recover the Major MacMahon map.
namespace majordex::qsym {

// List of positive parts. The empty composition only indexes the unit
// (M_() = 1), which appears in type B* elements and in products.
using Composition = std::vector<int>;

// The composition of n whose partial sums are the elements of S in {1..n-1}.
Composition comp_of_set(abindex::SubsetMask s, unsigned n);
// S_alpha = {a_1, a_1 + a_2, ..., a_1 + ... + a_(k-1)}.
abindex::SubsetMask set_of_comp(const Composition& alpha);
Composition reverse_comp(const Composition& alpha);
int comp_size(const Composition& alpha);
std::vector<Composition> compositions_of(unsigned n);

// Element of QSym in the monomial basis.
class QSymElem : public LinearCombination<Composition> {
public:
    using LinearCombination::LinearCombination;
    QSymElem() = default;
    QSymElem(const LinearCombination<Composition>& base) : LinearCombination(base) {}  // NOLINT
};

// Element of QSym (x) Z[s]: keys are (alpha, p) for M_alpha * s^p.
using BStarKey = std::pair<Composition, unsigned>;

class QSymBStarElem : public LinearCombination<BStarKey> {
public:
    using LinearCombination::LinearCombination;
    QSymBStarElem() = default;
    QSymBStarElem(const LinearCombination<BStarKey>& base) : LinearCombination(base) {}  // NOLINT
};

std::string to_string(const Composition& alpha);
std::string to_string(const QSymElem& x);
std::string to_string(const QSymBStarElem& x);
std::ostream& operator<<(std::ostream& os, const QSymElem& x);
std::ostream& operator<<(std::ostream& os, const QSymBStarElem& x);

// Applies alpha -> alpha* to every basis element.
QSymElem reverse(const QSymElem& x);

// gamma(v_alpha) = M_alpha for a homogeneous w of degree n - 1.
// Throws DomainError on heterogeneous input.
QSymElem gamma(const abindex::AbPoly& w);
// L_alpha = sum over S_alpha in T in {1..n-1} of M_co(T).
QSymElem fundamental_expand(const Composition& alpha);

// Overlapping shuffle product in the monomial basis.
QSymElem quasi_shuffle(const QSymElem& x, const QSymElem& y);
QSymBStarElem product(const QSymBStarElem& x, const QSymBStarElem& y);

// gamma_B*((a-b)^(a_1-1) b ... (a-b)^(a_k-1) b (a-b)^p) = M_alpha s^p for
// a homogeneous w of degree n = |alpha| + p.
QSymBStarElem gamma_bstar(const abindex::AbPoly& w);

// ps(f) = f(1, q, q^2, ...) truncated after q^order, by summing over
// strictly increasing index tuples.
qarith::QSeries ps(const QSymElem& x, unsigned order);
// ps*(f) = ps(f*).
qarith::QSeries ps_star(const QSymElem& x, unsigned order);
// ps_B*(f s^j) = q^deg(f) ps*(f).
qarith::QSeries ps_bstar(const QSymBStarElem& x, unsigned order);

// F(P) = gamma(Psi(P)).
QSymElem f_poset(const poset::GradedPoset& p);

// Polynomial in t_1..t_k: exponent vectors of length k.
using MultiPoly = LinearCombination<std::vector<unsigned>>;

// Sum over multichains 0 = x_0 <= x_1 <= ... <= x_k = 1 of
// t_1^rho(x_0,x_1) ... t_k^rho(x_(k-1),x_k).
MultiPoly f_poset_multichain(const poset::GradedPoset& p, unsigned k);
// The quasi-symmetric function evaluated in k variables t_1..t_k.
MultiPoly restrict_to_variables(const QSymElem& x, unsigned k);

// F_B*(P) = sum over x < 1 of F([0, x]) s^(rho(x, 1) - 1), with F of the
// one-element interval equal to 1.
QSymBStarElem f_bstar(const poset::GradedPoset& p);

// The dual poset (all covers reversed).
poset::GradedPoset dual_poset(const poset::GradedPoset& p);

// Checks Theta(w) = (1-q)^n [n]! ps*(gamma(w)) for w homogeneous of degree n-1.
bool verify_theta_via_ps(const abindex::AbPoly& w);
// Checks Theta(w) = (1-q)^n [n]! ps_B*(gamma_B*(w*)) for w homogeneous of degree n.
// Since the direct form below holds for every w, this is true exactly when
// Theta(w) = Theta(w*).
bool verify_theta_via_ps_bstar(const abindex::AbPoly& w);
// Checks Theta(w) = (1-q)^n [n]! ps_B*(gamma_B*(w)), without reversing w.
bool verify_theta_via_ps_bstar_direct(const abindex::AbPoly& w);

// Right-hand side (1-q)^n [n]! * series, truncated at the series order.
qarith::QSeries theta_prefactor_times(unsigned n, const qarith::QSeries& series);
// True when `theta` and `series` agree on every coefficient up to the order.
bool agrees_with(const qarith::QPoly& theta, const qarith::QSeries& series);

} // namespace majordex::qsym
