#pragma once

#include <random>
#include <vector>

#include "majordex/abindex.hpp"
#include "majordex/qarith.hpp"

namespace testsupport {

using majordex::Integer;
using majordex::abindex::AbPoly;
using majordex::abindex::AbWord;
using majordex::qarith::QPoly;

inline QPoly poly(std::initializer_list<long long> coeffs) { return QPoly::from_coefficients(coeffs); }
inline AbPoly ab(const char* text) { return AbPoly::parse(text); }
inline QPoly q_pow(unsigned e) { return QPoly::monomial(e); }

// Fixed seed so failures reproduce.
inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(0x5eed1234abcdULL);
    return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline QPoly random_poly(unsigned max_degree, int magnitude = 20) {
    QPoly out;
    const unsigned degree = static_cast<unsigned>(uniform(0, static_cast<int>(max_degree)));
    for (unsigned e = 0; e <= degree; ++e) out += QPoly::monomial(e, uniform(-magnitude, magnitude));
    return out;
}

inline AbWord random_word(unsigned length) {
    std::uint64_t bits = length == 0 ? 0 : rng()();
    if (length < 64) bits &= (std::uint64_t{1} << length) - 1;
    return AbWord(bits, length);
}

// Homogeneous polynomial of the given degree with a few random terms.
inline AbPoly random_homogeneous(unsigned degree, int max_terms = 6, int magnitude = 5) {
    AbPoly out;
    const int terms = uniform(1, max_terms);
    for (int k = 0; k < terms; ++k) out.add_term(random_word(degree), uniform(-magnitude, magnitude));
    return out;
}

// Every word of the given length.
inline std::vector<AbWord> all_words(unsigned length) {
    std::vector<AbWord> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) out.emplace_back(bits, length);
    return out;
}

} // namespace testsupport
