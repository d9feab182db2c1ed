#include "majordex/qarith.hpp"

#include <algorithm>
#include <sstream>

#include "majordex/error.hpp"

namespace majordex::qarith {

namespace {

// Appends "c*var" style terms with the sign folded into the separator.
void append_term(std::ostringstream& os, bool first, const Integer& coeff, const std::string& monomial) {
    Integer magnitude = coeff < 0 ? Integer(-coeff) : coeff;
    if (first) {
        if (coeff < 0) os << '-';
    } else {
        os << (coeff < 0 ? " - " : " + ");
    }
    if (monomial.empty()) {
        os << magnitude;
    } else if (magnitude == 1) {
        os << monomial;
    } else {
        os << magnitude << '*' << monomial;
    }
}

std::string power_of(const char* var, unsigned e) {
    if (e == 0) return {};
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

} // namespace

// ---------------------------------------------------------------- QPoly

QPoly QPoly::monomial(unsigned exponent, const Integer& coeff) {
    QPoly p;
    p.terms_.add_term(exponent, coeff);
    return p;
}

QPoly QPoly::from_coefficients(std::span<const Integer> coeffs) {
    QPoly p;
    for (std::size_t e = 0; e < coeffs.size(); ++e) p.terms_.add_term(static_cast<unsigned>(e), coeffs[e]);
    return p;
}

QPoly QPoly::from_coefficients(std::initializer_list<long long> coeffs) {
    QPoly p;
    unsigned e = 0;
    for (long long c : coeffs) p.terms_.add_term(e++, Integer(c));
    return p;
}

std::optional<unsigned> QPoly::degree() const {
    if (terms_.is_zero()) return std::nullopt;
    return terms_.terms().rbegin()->first;
}

std::vector<Integer> QPoly::dense() const {
    auto deg = degree();
    if (!deg) return {};
    std::vector<Integer> out(*deg + 1);
    for (const auto& [e, c] : terms_) out[e] = c;
    return out;
}

Integer QPoly::evaluate(const Integer& q) const {
    Integer result = 0;
    for (const auto& [e, c] : terms_) result += c * boost::multiprecision::pow(q, e);
    return result;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    LinearCombination<unsigned> product;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) product.add_term(e1 + e2, c1 * c2);
    terms_ = std::move(product);
    return *this;
}

QPoly pow(const QPoly& base, unsigned exponent) {
    QPoly result = 1;
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

std::optional<QPoly> exact_divide(const QPoly& p, const QPoly& d) {
    auto d_deg = d.degree();
    if (!d_deg) throw DomainError("exact_divide: division by the zero polynomial");
    const Integer lead = d.coefficient(*d_deg);
    QPoly remainder = p;
    QPoly quotient;
    while (auto r_deg = remainder.degree()) {
        if (*r_deg < *d_deg) return std::nullopt;
        const Integer c = remainder.coefficient(*r_deg);
        if (c % lead != 0) return std::nullopt;
        QPoly step = QPoly::monomial(*r_deg - *d_deg, c / lead);
        quotient += step;
        remainder -= step * d;
    }
    return quotient;
}

bool divides(const QPoly& d, const QPoly& p) { return exact_divide(p, d).has_value(); }

std::string to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        append_term(os, first, c, power_of("q", e));
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << to_string(p); }

QPoly q_int(unsigned n) {
    QPoly p;
    for (unsigned e = 0; e < n; ++e) p += QPoly::monomial(e);
    return p;
}

QPoly q_factorial(unsigned n) {
    QPoly p = 1;
    for (unsigned k = 1; k <= n; ++k) p *= q_int(k);
    return p;
}

QPoly gaussian_multinomial(std::span<const int> alpha) {
    if (alpha.empty()) throw DomainError("gaussian_multinomial: empty composition");
    unsigned n = 0;
    QPoly denominator = 1;
    for (int part : alpha) {
        if (part < 1) throw DomainError("gaussian_multinomial: composition parts must be positive");
        n += static_cast<unsigned>(part);
        denominator *= q_factorial(static_cast<unsigned>(part));
    }
    auto quotient = exact_divide(q_factorial(n), denominator);
    if (!quotient) throw InternalError("gaussian_multinomial: nonzero remainder");
    return *quotient;
}

QPoly gaussian_binomial(unsigned n, unsigned k) {
    if (k > n) return QPoly();
    if (k == 0 || k == n) return 1;
    const int parts[] = {static_cast<int>(k), static_cast<int>(n - k)};
    return gaussian_multinomial(parts);
}

// ---------------------------------------------------------------- QTPoly

QTPoly QTPoly::monomial(unsigned q_exp, unsigned t_exp, const Integer& coeff) {
    QTPoly p;
    p.terms_.add_term({q_exp, t_exp}, coeff);
    return p;
}

QPoly QTPoly::at_t_one() const {
    QPoly p;
    for (const auto& [e, c] : terms_) p += QPoly::monomial(e.first, c);
    return p;
}

QPoly QTPoly::at_q_one() const {
    QPoly p;
    for (const auto& [e, c] : terms_) p += QPoly::monomial(e.second, c);
    return p;
}

QPoly QTPoly::t_coefficient(unsigned k) const {
    QPoly p;
    for (const auto& [e, c] : terms_)
        if (e.second == k) p += QPoly::monomial(e.first, c);
    return p;
}

std::optional<unsigned> QTPoly::t_degree() const {
    std::optional<unsigned> deg;
    for (const auto& [e, c] : terms_) deg = std::max(deg.value_or(0), e.second);
    return deg;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) {
    LinearCombination<Exponents> product;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) product.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    terms_ = std::move(product);
    return *this;
}

std::optional<QTPoly> exact_divide(const QTPoly& p, const QTPoly& d) {
    if (d.is_zero()) throw DomainError("exact_divide: division by the zero polynomial");
    // Lexicographic order on (q, t) exponents is a monomial order, so the
    // leading-term long division below is exact when it terminates cleanly.
    const auto& [d_exp, d_lead] = *d.terms().terms().rbegin();
    QTPoly remainder = p;
    QTPoly quotient;
    while (!remainder.is_zero()) {
        const auto& [r_exp, r_lead] = *remainder.terms().terms().rbegin();
        if (r_exp.first < d_exp.first || r_exp.second < d_exp.second) return std::nullopt;
        if (r_lead % d_lead != 0) return std::nullopt;
        QTPoly step = QTPoly::monomial(r_exp.first - d_exp.first, r_exp.second - d_exp.second, r_lead / d_lead);
        quotient += step;
        remainder -= step * d;
    }
    return quotient;
}

std::string to_string(const QTPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string mono = power_of("q", e.first);
        std::string t = power_of("t", e.second);
        if (!mono.empty() && !t.empty()) mono += '*';
        mono += t;
        append_term(os, first, c, mono);
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QTPoly& p) { return os << to_string(p); }

// ---------------------------------------------------------------- QSeries

QSeries QSeries::from_poly(const QPoly& p, unsigned order) {
    QSeries s(order);
    for (const auto& [e, c] : p.terms()) s.add_to(e, c);
    return s;
}

QSeries QSeries::geometric(unsigned step, unsigned order) {
    if (step == 0) throw DomainError("QSeries::geometric: step must be positive");
    QSeries s(order);
    for (unsigned e = 0; e <= order; e += step) s.coeffs_[e] = 1;
    return s;
}

QSeries QSeries::truncated(unsigned order) const {
    QSeries s(std::min(order, this->order()));
    std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
    return s;
}

QPoly QSeries::to_poly() const { return QPoly::from_coefficients(coeffs_); }

QSeries& QSeries::operator+=(const QSeries& o) {
    *this = truncated(o.order());
    for (unsigned e = 0; e <= order(); ++e) coeffs_[e] += o.coeffs_[e];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    *this = truncated(o.order());
    for (unsigned e = 0; e <= order(); ++e) coeffs_[e] -= o.coeffs_[e];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries out(std::min(a.order(), b.order()));
    const unsigned n = out.order();
    for (unsigned i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (unsigned j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

QSeries operator*(const QPoly& p, const QSeries& s) {
    QSeries out(s.order());
    for (const auto& [e, c] : p.terms()) {
        if (e > s.order()) break;
        for (unsigned j = 0; e + j <= s.order(); ++j) out.coeffs_[e + j] += c * s.coeffs_[j];
    }
    return out;
}

QSeries series_inverse(const QPoly& p, unsigned order) {
    const Integer c0 = p.coefficient(0);
    if (c0 != 1 && c0 != -1) throw DomainError("series_inverse: constant term must be +1 or -1");
    QSeries s(order);
    std::vector<Integer> inv(order + 1);
    for (unsigned k = 0; k <= order; ++k) {
        Integer acc = k == 0 ? Integer(1) : Integer(0);
        for (const auto& [e, c] : p.terms()) {
            if (e == 0) continue;
            if (e > k) break;
            acc -= c * inv[k - e];
        }
        inv[k] = acc * c0;  // dividing by +-1
        s.add_to(k, inv[k]);
    }
    return s;
}

std::string to_string(const QSeries& s) {
    QPoly p = s.to_poly();
    std::string body = to_string(p);
    return body + " + O(q^" + std::to_string(s.order() + 1) + ")";
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) { return os << to_string(s); }

// ---------------------------------------------------------------- TSeriesQ

TSeriesQ TSeriesQ::from_qt(const QTPoly& p, unsigned order) {
    TSeriesQ s(order);
    for (const auto& [e, c] : p.terms()) s.add_to(e.second, QPoly::monomial(e.first, c));
    return s;
}

TSeriesQ& TSeriesQ::operator+=(const TSeriesQ& o) {
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

TSeriesQ operator*(const TSeriesQ& a, const TSeriesQ& b) {
    TSeriesQ out(std::min(a.order(), b.order()));
    const unsigned n = out.order();
    for (unsigned i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

TSeriesQ series_inverse(const TSeriesQ& s) {
    const QPoly& c0 = s.coefficient(0);
    Integer unit;
    if (c0 == QPoly(1)) {
        unit = 1;
    } else if (c0 == QPoly(-1)) {
        unit = -1;
    } else {
        throw DomainError("series_inverse: t^0 coefficient must be +1 or -1");
    }
    TSeriesQ inv(s.order());
    for (unsigned k = 0; k <= s.order(); ++k) {
        QPoly acc = k == 0 ? QPoly(1) : QPoly();
        for (unsigned i = 1; i <= k; ++i) acc -= s.coefficient(i) * inv.coefficient(k - i);
        inv.add_to(k, acc * QPoly(unit));
    }
    return inv;
}

} // namespace majordex::qarith
