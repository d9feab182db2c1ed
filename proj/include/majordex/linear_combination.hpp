#pragma once

#include <map>
#include <utility>

#include "majordex/integer.hpp"

namespace majordex {

// Finite integer linear combination of basis keys. Zero coefficients are
// never stored, so two combinations are equal iff their term maps are equal.
template <class Key>
class LinearCombination {
public:
    using map_type = std::map<Key, Integer>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;
    explicit LinearCombination(const Key& key, Integer coeff = 1) { add_term(key, std::move(coeff)); }

    void add_term(const Key& key, const Integer& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Integer coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const map_type& terms() const noexcept { return terms_; }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    LinearCombination& operator+=(const LinearCombination& other) {
        for (const auto& [k, c] : other.terms_) add_term(k, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& other) {
        for (const auto& [k, c] : other.terms_) add_term(k, -c);
        return *this;
    }
    LinearCombination& operator*=(const Integer& scalar) {
        if (scalar == 0) {
            terms_.clear();
        } else {
            for (auto& [k, c] : terms_) c *= scalar;
        }
        return *this;
    }

    friend LinearCombination operator+(LinearCombination lhs, const LinearCombination& rhs) { return lhs += rhs; }
    friend LinearCombination operator-(LinearCombination lhs, const LinearCombination& rhs) { return lhs -= rhs; }
    friend LinearCombination operator-(LinearCombination x) { return x *= Integer(-1); }
    friend LinearCombination operator*(LinearCombination x, const Integer& s) { return x *= s; }
    friend LinearCombination operator*(const Integer& s, LinearCombination x) { return x *= s; }
    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    map_type terms_;
};

} // namespace majordex
