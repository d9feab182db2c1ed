#include "majordex/permstat.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "majordex/error.hpp"

namespace majordex::permstat {

using qarith::QPoly;
using qarith::QTPoly;

EnumerationLimits EnumerationLimits::from_environment() {
    EnumerationLimits limits;
    if (const char* env = std::getenv("MAJORDEX_MAX_ENUM")) {
        char* end = nullptr;
        const unsigned long value = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && value > 0 && value <= 20) {
            limits.max_multiset_length = static_cast<unsigned>(value);
            limits.max_eulerian_length = static_cast<unsigned>(value);
        }
    }
    return limits;
}

std::vector<int> descent_set(const std::vector<int>& seq) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] > seq[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

unsigned maj(const std::vector<int>& seq) {
    unsigned sum = 0;
    for (int i : descent_set(seq)) sum += static_cast<unsigned>(i);
    return sum;
}

unsigned des(const std::vector<int>& seq) { return static_cast<unsigned>(descent_set(seq).size()); }

abindex::AbWord descent_word(const std::vector<int>& seq) {
    if (seq.empty()) throw DomainError("descent_word: empty sequence");
    return abindex::word_of_set(descent_set(seq), static_cast<unsigned>(seq.size() - 1));
}

// ---------------------------------------------------------------- multisets

MultisetPermutations::MultisetPermutations(const std::vector<int>& alpha, const EnumerationLimits& limits) {
    if (alpha.empty()) throw DomainError("enumerate_multiset: empty composition");
    int total = 0;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (alpha[k] < 1) throw DomainError("enumerate_multiset: composition parts must be positive");
        total += alpha[k];
        current_.insert(current_.end(), static_cast<std::size_t>(alpha[k]), static_cast<int>(k) + 1);
    }
    if (static_cast<unsigned>(total) > limits.max_multiset_length)
        throw BoundError("enumerate_multiset: size " + std::to_string(total) + " exceeds the bound " +
                         std::to_string(limits.max_multiset_length));
}

const std::vector<int>* MultisetPermutations::next() {
    if (done_) return nullptr;
    if (!started_) {
        started_ = true;
        return &current_;
    }
    if (!std::next_permutation(current_.begin(), current_.end())) {
        done_ = true;
        return nullptr;
    }
    return &current_;
}

QPoly maj_distribution(const std::vector<int>& alpha, const EnumerationLimits& limits) {
    std::vector<Integer> counts;
    MultisetPermutations perms(alpha, limits);
    while (const auto* pi = perms.next()) {
        const unsigned m = maj(*pi);
        if (counts.size() <= m) counts.resize(m + 1);
        counts[m] += 1;
    }
    return QPoly::from_coefficients(counts);
}

// ---------------------------------------------------------------- signed

std::strong_ordering compare(const SignedLetter& lhs, const SignedLetter& rhs) {
    if (lhs.sentinel && rhs.sentinel) return std::strong_ordering::equal;
    if (!lhs.sentinel && !rhs.sentinel) {
        if (auto c = lhs.sign <=> rhs.sign; c != 0) return c;
        return lhs.value <=> rhs.value;
    }
    if (lhs.sentinel) return rhs.sign > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return lhs.sign > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

namespace {

int sign_choice(std::size_t index) { return index == 0 ? -1 : static_cast<int>(index) + 1; }

} // namespace

SignedPermutations::SignedPermutations(const std::vector<int>& r, const EnumerationLimits& limits) : r_(r) {
    if (r.empty()) throw DomainError("enumerate_signed: empty vector");
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < 1) throw DomainError("enumerate_signed: entries must be positive");
        count_ *= static_cast<std::uint64_t>(i + 1) * static_cast<std::uint64_t>(r[i]);
        if (count_ > limits.max_signed_count)
            throw BoundError("enumerate_signed: more than " + std::to_string(limits.max_signed_count) +
                             " signed permutations");
    }
    perm_.resize(r.size());
    std::iota(perm_.begin(), perm_.end(), 1);
    sign_index_.assign(r.size(), 0);
    current_.resize(r.size() + 1);
    current_.back() = SignedLetter::zero();
}

bool SignedPermutations::advance_signs() {
    // odometer over the sign choices, rightmost position fastest
    for (std::size_t k = sign_index_.size(); k-- > 0;) {
        const std::size_t choices = static_cast<std::size_t>(r_[perm_[k] - 1]);
        if (++sign_index_[k] < choices) return true;
        sign_index_[k] = 0;
    }
    return false;
}

const SignedPerm* SignedPermutations::next() {
    if (done_) return nullptr;
    if (started_ && !advance_signs()) {
        if (!std::next_permutation(perm_.begin(), perm_.end())) {
            done_ = true;
            return nullptr;
        }
    }
    started_ = true;
    for (std::size_t k = 0; k < perm_.size(); ++k)
        current_[k] = SignedLetter{false, sign_choice(sign_index_[k]), perm_[k]};
    return &current_;
}

unsigned maj(const SignedPerm& sigma) {
    unsigned sum = 0;
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
        if (compare(sigma[i], sigma[i + 1]) > 0) sum += static_cast<unsigned>(i) + 1;
    return sum;
}

QPoly signed_maj_distribution(const std::vector<int>& r, const EnumerationLimits& limits) {
    std::vector<Integer> counts;
    SignedPermutations perms(r, limits);
    while (const auto* sigma = perms.next()) {
        const unsigned m = maj(*sigma);
        if (counts.size() <= m) counts.resize(m + 1);
        counts[m] += 1;
    }
    return QPoly::from_coefficients(counts);
}

// ---------------------------------------------------------------- Eulerian

QTPoly q_eulerian(unsigned n, const EnumerationLimits& limits) {
    if (n > limits.max_eulerian_length)
        throw BoundError("q_eulerian: n = " + std::to_string(n) + " exceeds the bound " +
                         std::to_string(limits.max_eulerian_length));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::map<std::pair<unsigned, unsigned>, std::uint64_t> counts;
    do {
        ++counts[{maj(perm), des(perm)}];
    } while (std::next_permutation(perm.begin(), perm.end()));
    QTPoly out;
    for (const auto& [e, c] : counts) out += QTPoly::monomial(e.first, e.second, Integer(c));
    return out;
}

CarlitzResult carlitz_check(unsigned n, unsigned t_order, const EnumerationLimits& limits) {
    using qarith::TSeriesQ;
    TSeriesQ lhs(t_order);
    for (unsigned k = 0; k <= t_order; ++k) lhs.add_to(k, qarith::pow(qarith::q_int(k + 1), n));

    QTPoly denominator = QTPoly::monomial(0, 0);
    for (unsigned j = 0; j <= n; ++j) denominator *= QTPoly::monomial(0, 0) - QTPoly::monomial(j, 1);
    const TSeriesQ rhs = TSeriesQ::from_qt(q_eulerian(n, limits), t_order) *
                         qarith::series_inverse(TSeriesQ::from_qt(denominator, t_order));

    CarlitzResult result;
    for (unsigned k = 0; k <= t_order; ++k) {
        if (lhs.coefficient(k) != rhs.coefficient(k)) {
            result.ok = false;
            result.first_failing_order = k;
            break;
        }
    }
    return result;
}

} // namespace majordex::permstat
