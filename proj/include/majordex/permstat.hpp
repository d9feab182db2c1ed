#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "majordex/abindex.hpp"
#include "majordex/qarith.hpp"

// Brute-force permutation statistics. Nothing here goes through posets or
// the ab-index, so these serve as independent oracles.
namespace majordex::permstat {

// Enumeration bounds. `from_environment` reads MAJORDEX_MAX_ENUM, which
// overrides the permutation-length bounds.
struct EnumerationLimits {
    unsigned max_multiset_length = 10;
    unsigned max_eulerian_length = 9;
    std::uint64_t max_signed_count = 1'000'000;

    static EnumerationLimits from_environment();
};

// Strict descents: positions i with seq[i] > seq[i+1] (1-based).
std::vector<int> descent_set(const std::vector<int>& seq);
unsigned maj(const std::vector<int>& seq);
unsigned des(const std::vector<int>& seq);
// Degree n-1 word with b at each descent. Throws DomainError for n = 0.
abindex::AbWord descent_word(const std::vector<int>& seq);

// Lazily walks the permutations of {1^a_1, 2^a_2, ...} in lexicographic order.
class MultisetPermutations {
public:
    explicit MultisetPermutations(const std::vector<int>& alpha,
                                  const EnumerationLimits& limits = EnumerationLimits::from_environment());
    // Next permutation, or nullptr when exhausted.
    const std::vector<int>* next();

private:
    std::vector<int> current_;
    bool started_ = false;
    bool done_ = false;
};

// sum over multiset permutations of q^maj.
qarith::QPoly maj_distribution(const std::vector<int>& alpha,
                               const EnumerationLimits& limits = EnumerationLimits::from_environment());

// One letter of an r-signed permutation: (sign, value), or the sentinel 0.
struct SignedLetter {
    bool sentinel = false;
    int sign = 0;
    int value = 0;

    static SignedLetter zero() { return {true, 0, 0}; }
};

// (j, i) < (j', i') lexicographically; 0 < (j, i) iff j > 0.
std::strong_ordering compare(const SignedLetter& lhs, const SignedLetter& rhs);

// ((j_1, pi_1), ..., (j_n, pi_n), 0) with j_k in {-1} u {2..r_(pi_k)}.
using SignedPerm = std::vector<SignedLetter>;

class SignedPermutations {
public:
    explicit SignedPermutations(const std::vector<int>& r,
                                const EnumerationLimits& limits = EnumerationLimits::from_environment());
    const SignedPerm* next();
    // n! * prod r_i
    std::uint64_t count() const noexcept { return count_; }

private:
    bool advance_signs();

    std::vector<int> r_;
    std::vector<int> perm_;
    std::vector<std::size_t> sign_index_;
    SignedPerm current_;
    std::uint64_t count_ = 1;
    bool started_ = false;
    bool done_ = false;
};

unsigned maj(const SignedPerm& sigma);
qarith::QPoly signed_maj_distribution(const std::vector<int>& r,
                                      const EnumerationLimits& limits = EnumerationLimits::from_environment());

// sum over S_n of q^maj t^des.
qarith::QTPoly q_eulerian(unsigned n, const EnumerationLimits& limits = EnumerationLimits::from_environment());

struct CarlitzResult {
    bool ok = true;
    std::optional<unsigned> first_failing_order;
};

// Compares sum_k [k+1]^n t^k with A_n(q,t) / prod_{j=0..n} (1 - t q^j) as
// series in t truncated after t^t_order.
CarlitzResult carlitz_check(unsigned n, unsigned t_order,
                            const EnumerationLimits& limits = EnumerationLimits::from_environment());

} // namespace majordex::permstat
