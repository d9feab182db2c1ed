#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "majordex/integer.hpp"
#include "majordex/linear_combination.hpp"

// Exact commutative arithmetic in q (and t): polynomials, truncated power
// series, and the q-analogues [n], [n]! and Gaussian multinomials.
namespace majordex::qarith {

// Sparse univariate polynomial in q with integer coefficients.
class QPoly {
public:
    QPoly() = default;
    QPoly(int constant) : QPoly(Integer(constant)) {}  // NOLINT: implicit from literals is intended
    QPoly(const Integer& constant) { terms_.add_term(0, constant); }  // NOLINT

    static QPoly monomial(unsigned exponent, const Integer& coeff = 1);
    // Builds c_0 + c_1 q + ... from a dense coefficient list.
    static QPoly from_coefficients(std::span<const Integer> coeffs);
    static QPoly from_coefficients(std::initializer_list<long long> coeffs);

    bool is_zero() const noexcept { return terms_.is_zero(); }
    // Degree of the polynomial; std::nullopt for the zero polynomial.
    std::optional<unsigned> degree() const;
    Integer coefficient(unsigned exponent) const { return terms_.coefficient(exponent); }
    const LinearCombination<unsigned>& terms() const noexcept { return terms_; }
    // Dense coefficient list of length degree+1 (empty for zero).
    std::vector<Integer> dense() const;

    Integer evaluate(const Integer& q) const;

    QPoly& operator+=(const QPoly& o) { terms_ += o.terms_; return *this; }
    QPoly& operator-=(const QPoly& o) { terms_ -= o.terms_; return *this; }
    QPoly& operator*=(const QPoly& o);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator-(const QPoly& a) { return QPoly() - a; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    LinearCombination<unsigned> terms_;
};

QPoly pow(const QPoly& base, unsigned exponent);

// Quotient of p by d when d divides p in Z[q]; std::nullopt otherwise.
// Throws DomainError when d is zero.
std::optional<QPoly> exact_divide(const QPoly& p, const QPoly& d);
bool divides(const QPoly& d, const QPoly& p);

// Canonical rendering, ascending exponents: "1 + 2*q - q^3".
std::string to_string(const QPoly& p);
std::ostream& operator<<(std::ostream& os, const QPoly& p);

// [n] = 1 + q + ... + q^(n-1); zero for n = 0.
QPoly q_int(unsigned n);
// [n]! = [n][n-1]...[1]; 1 for n = 0.
QPoly q_factorial(unsigned n);
// [n]! / ([a_1]! ... [a_k]!) for the composition a of n, by exact division.
QPoly gaussian_multinomial(std::span<const int> alpha);
// Gaussian binomial [n choose k].
QPoly gaussian_binomial(unsigned n, unsigned k);

// Polynomial in q and t; keys are (q-exponent, t-exponent).
class QTPoly {
public:
    using Exponents = std::pair<unsigned, unsigned>;

    QTPoly() = default;
    static QTPoly monomial(unsigned q_exp, unsigned t_exp, const Integer& coeff = 1);

    bool is_zero() const noexcept { return terms_.is_zero(); }
    Integer coefficient(unsigned q_exp, unsigned t_exp) const { return terms_.coefficient({q_exp, t_exp}); }
    const LinearCombination<Exponents>& terms() const noexcept { return terms_; }

    // Substitutes t = 1, giving a polynomial in q.
    QPoly at_t_one() const;
    // Substitutes q = 1; the result is a polynomial in t (stored as a QPoly).
    QPoly at_q_one() const;
    // Coefficient of t^k as a polynomial in q.
    QPoly t_coefficient(unsigned k) const;
    std::optional<unsigned> t_degree() const;

    QTPoly& operator+=(const QTPoly& o) { terms_ += o.terms_; return *this; }
    QTPoly& operator-=(const QTPoly& o) { terms_ -= o.terms_; return *this; }
    QTPoly& operator*=(const QTPoly& o);

    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(QTPoly a, const QTPoly& b) { return a *= b; }
    friend bool operator==(const QTPoly&, const QTPoly&) = default;

private:
    LinearCombination<Exponents> terms_;
};

std::optional<QTPoly> exact_divide(const QTPoly& p, const QTPoly& d);

// Rendering ordered by (q-exponent, t-exponent): "1 + q*t + 3*q^2*t^2".
std::string to_string(const QTPoly& p);
std::ostream& operator<<(std::ostream& os, const QTPoly& p);

// Power series in q known up to and including q^order.
class QSeries {
public:
    explicit QSeries(unsigned order) : coeffs_(order + 1) {}
    static QSeries from_poly(const QPoly& p, unsigned order);
    // 1 / (1 - q^step) truncated at `order`; step must be positive.
    static QSeries geometric(unsigned step, unsigned order);

    unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    const Integer& coefficient(unsigned e) const { return coeffs_.at(e); }
    void add_to(unsigned e, const Integer& c) {
        if (e <= order()) coeffs_[e] += c;
    }
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    QSeries truncated(unsigned order) const;
    // The coefficients as a polynomial (exact only if the true series ends by `order`).
    QPoly to_poly() const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    // A polynomial is known exactly, so the order of the series is kept.
    friend QSeries operator*(const QPoly& p, const QSeries& s);
    friend QSeries operator*(const QSeries& s, const QPoly& p) { return p * s; }
    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<Integer> coeffs_;
};

// s with p * s = 1 up to q^order. Throws DomainError unless p(0) = +-1.
QSeries series_inverse(const QPoly& p, unsigned order);

std::string to_string(const QSeries& s);
std::ostream& operator<<(std::ostream& os, const QSeries& s);

// Power series in t, truncated after t^order, with coefficients in Z[q].
class TSeriesQ {
public:
    explicit TSeriesQ(unsigned order) : coeffs_(order + 1) {}
    static TSeriesQ from_qt(const QTPoly& p, unsigned order);

    unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    const QPoly& coefficient(unsigned k) const { return coeffs_.at(k); }
    void add_to(unsigned k, const QPoly& c) {
        if (k <= order()) coeffs_[k] += c;
    }

    TSeriesQ& operator+=(const TSeriesQ& o);
    friend TSeriesQ operator+(TSeriesQ a, const TSeriesQ& b) { return a += b; }
    friend TSeriesQ operator*(const TSeriesQ& a, const TSeriesQ& b);
    friend bool operator==(const TSeriesQ&, const TSeriesQ&) = default;

private:
    std::vector<QPoly> coeffs_;
};

// Inverse in t; the t^0 coefficient must be the constant polynomial +-1.
TSeriesQ series_inverse(const TSeriesQ& s);

} // namespace majordex::qarith
