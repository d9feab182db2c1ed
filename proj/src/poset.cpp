#include "majordex/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

namespace majordex::poset {

using abindex::AbPoly;
using abindex::SubsetMask;
using qarith::QPoly;

const char* to_string(PosetErrorKind kind) {
    switch (kind) {
    case PosetErrorKind::Empty: return "empty poset";
    case PosetErrorKind::DuplicateElement: return "duplicate element";
    case PosetErrorKind::UnknownElement: return "unknown element";
    case PosetErrorKind::SelfCover: return "self cover";
    case PosetErrorKind::DuplicateCover: return "duplicate cover";
    case PosetErrorKind::Cycle: return "cycle";
    case PosetErrorKind::NoUniqueMinimum: return "no unique minimum";
    case PosetErrorKind::NoUniqueMaximum: return "no unique maximum";
    case PosetErrorKind::NotGraded: return "not graded";
    }
    return "invalid poset";
}

namespace {

std::string join_names(const std::vector<std::string>& names, const std::vector<ElementId>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ", ";
        out += names[ids[i]];
    }
    return out;
}

// Accumulates elements and covers for the constructors.
struct Builder {
    std::vector<std::string> names;
    std::vector<Cover> covers;

    ElementId add(std::string name) {
        names.push_back(std::move(name));
        return names.size() - 1;
    }
    void cover(ElementId lo, ElementId hi) { covers.emplace_back(lo, hi); }
    GradedPoset build() { return GradedPoset::from_covers(std::move(names), covers); }
};

std::string fresh_top_name(const std::vector<std::string>& names) {
    std::set<std::string> taken(names.begin(), names.end());
    std::string name = "top";
    while (taken.count(name)) name += "'";
    return name;
}

std::string subset_name(SubsetMask mask) {
    std::string out = "{";
    bool first = true;
    for (int e : abindex::subset_elements(mask)) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw InternalError("flag_f: chain count overflows 64 bits");
    return out;
}

} // namespace

// ---------------------------------------------------------------- GradedPoset

GradedPoset GradedPoset::from_named_covers(std::vector<std::string> names,
                                           const std::vector<std::pair<std::string, std::string>>& covers) {
    std::unordered_map<std::string, ElementId> index;
    for (ElementId i = 0; i < names.size(); ++i)
        if (!index.emplace(names[i], i).second)
            throw PosetError(PosetErrorKind::DuplicateElement, "element \"" + names[i] + "\" is listed twice");
    std::vector<Cover> ids;
    ids.reserve(covers.size());
    for (const auto& [lo, hi] : covers) {
        auto a = index.find(lo);
        auto b = index.find(hi);
        if (a == index.end() || b == index.end()) {
            const std::string& missing = a == index.end() ? lo : hi;
            throw PosetError(PosetErrorKind::UnknownElement,
                             "cover [\"" + lo + "\", \"" + hi + "\"] names unknown element \"" + missing + "\"");
        }
        ids.emplace_back(a->second, b->second);
    }
    return from_covers(std::move(names), ids);
}

GradedPoset GradedPoset::from_covers(std::vector<std::string> names, const std::vector<Cover>& covers) {
    const std::size_t n = names.size();
    if (n == 0) throw PosetError(PosetErrorKind::Empty, "a poset needs at least one element");
    {
        std::set<std::string> seen;
        for (const auto& name : names)
            if (!seen.insert(name).second)
                throw PosetError(PosetErrorKind::DuplicateElement, "element \"" + name + "\" is listed twice");
    }

    GradedPoset p;
    p.names_ = std::move(names);
    p.up_.assign(n, {});
    p.down_.assign(n, {});
    std::set<Cover> seen_covers;
    for (const auto& [lo, hi] : covers) {
        if (lo >= n || hi >= n)
            throw PosetError(PosetErrorKind::UnknownElement, "cover refers to element index " + std::to_string(std::max(lo, hi)));
        const std::string text = "[\"" + p.names_[lo] + "\", \"" + p.names_[hi] + "\"]";
        if (lo == hi) throw PosetError(PosetErrorKind::SelfCover, "cover " + text + " relates an element to itself");
        if (!seen_covers.insert({lo, hi}).second)
            throw PosetError(PosetErrorKind::DuplicateCover, "cover " + text + " is listed twice");
        p.up_[lo].push_back(hi);
        p.down_[hi].push_back(lo);
    }
    for (auto& v : p.up_) std::sort(v.begin(), v.end());
    for (auto& v : p.down_) std::sort(v.begin(), v.end());

    // Kahn's algorithm gives a topological order or exposes a cycle.
    std::vector<std::size_t> pending(n);
    std::vector<ElementId> order;
    order.reserve(n);
    for (ElementId x = 0; x < n; ++x) {
        pending[x] = p.down_[x].size();
        if (pending[x] == 0) order.push_back(x);
    }
    for (std::size_t head = 0; head < order.size(); ++head)
        for (ElementId y : p.up_[order[head]])
            if (--pending[y] == 0) order.push_back(y);
    if (order.size() != n) {
        for (ElementId x = 0; x < n; ++x)
            if (pending[x] != 0) throw PosetError(PosetErrorKind::Cycle, "element \"" + p.names_[x] + "\" lies on a cycle of covers");
    }

    std::vector<ElementId> minimal, maximal;
    for (ElementId x = 0; x < n; ++x) {
        if (p.down_[x].empty()) minimal.push_back(x);
        if (p.up_[x].empty()) maximal.push_back(x);
    }
    if (minimal.size() != 1)
        throw PosetError(PosetErrorKind::NoUniqueMinimum, "minimal elements are " + join_names(p.names_, minimal));
    if (maximal.size() != 1)
        throw PosetError(PosetErrorKind::NoUniqueMaximum, "maximal elements are " + join_names(p.names_, maximal));
    p.bottom_ = minimal.front();
    p.top_ = maximal.front();

    p.rank_of_.assign(n, 0);
    for (ElementId y : order) {
        if (p.down_[y].empty()) continue;
        const unsigned r = p.rank_of_[p.down_[y].front()] + 1;
        for (ElementId x : p.down_[y])
            if (p.rank_of_[x] + 1 != r)
                throw PosetError(PosetErrorKind::NotGraded, "cover [\"" + p.names_[x] + "\", \"" + p.names_[y] +
                                                                "\"] does not raise the rank by one");
        p.rank_of_[y] = r;
    }

    p.levels_.assign(p.rank_of_[p.top_] + 1, {});
    for (ElementId x = 0; x < n; ++x) p.levels_[p.rank_of_[x]].push_back(x);

    p.above_.assign(n, ElementSet(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        p.above_[*it].insert(*it);
        for (ElementId y : p.up_[*it]) p.above_[*it] |= p.above_[y];
    }
    return p;
}

std::optional<ElementId> GradedPoset::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<ElementId>(it - names_.begin());
}

std::vector<Cover> GradedPoset::covers() const {
    std::vector<Cover> out;
    for (ElementId x = 0; x < size(); ++x)
        for (ElementId y : up_[x]) out.emplace_back(x, y);
    return out;
}

std::vector<ElementId> GradedPoset::interval_elements(ElementId x, ElementId y) const {
    std::vector<ElementId> out;
    if (!leq(x, y)) return out;
    for (unsigned r = rank_of(x); r <= rank_of(y); ++r)
        for (ElementId z : levels_[r])
            if (leq(x, z) && leq(z, y)) out.push_back(z);
    return out;
}

GradedPoset GradedPoset::interval(ElementId x, ElementId y) const {
    if (!leq(x, y)) throw DomainError("interval: \"" + name(x) + "\" is not below \"" + name(y) + "\"");
    std::vector<ElementId> members = interval_elements(x, y);
    std::unordered_map<ElementId, ElementId> local;
    Builder b;
    for (ElementId z : members) local.emplace(z, b.add(names_[z]));
    for (ElementId z : members)
        for (ElementId w : up_[z])
            if (auto it = local.find(w); it != local.end()) b.cover(local.at(z), it->second);
    return b.build();
}

GradedPoset GradedPoset::dual() const {
    std::vector<Cover> reversed;
    for (const auto& [lo, hi] : covers()) reversed.emplace_back(hi, lo);
    return from_covers(names_, reversed);
}

// ---------------------------------------------------------------- flag vectors

FlagVector flag_f(const GradedPoset& p) {
    const unsigned rank = p.rank();
    if (rank == 0) return {{0, 1}};
    const unsigned n = rank - 1;
    if (n > 24) throw DomainError("flag_f: rank too large for subset enumeration");

    // chains_to[S][k]: number of chains bottom < x_1 < ... ending at the k-th
    // element of level max(S), with intermediate ranks exactly S.
    const SubsetMask count = SubsetMask{1} << n;
    std::vector<std::vector<std::uint64_t>> chains_to(count);
    FlagVector f;
    chains_to[0] = {1};  // level 0 holds only the bottom
    f[0] = 1;
    for (SubsetMask s = 1; s < count; ++s) {
        const unsigned top_rank = 64 - static_cast<unsigned>(std::countl_zero(s));
        const SubsetMask prev = s & ~(SubsetMask{1} << (top_rank - 1));
        const unsigned prev_rank = prev == 0 ? 0 : 64 - static_cast<unsigned>(std::countl_zero(prev));
        const auto lower = p.level(prev_rank);
        const auto upper = p.level(top_rank);
        const auto& from = chains_to[prev];
        auto& to = chains_to[s];
        to.assign(upper.size(), 0);
        std::uint64_t total = 0;
        for (std::size_t j = 0; j < upper.size(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t i = 0; i < lower.size(); ++i)
                if (from[i] != 0 && p.leq(lower[i], upper[j])) acc = checked_add(acc, from[i]);
            to[j] = acc;
            total = checked_add(total, acc);
        }
        f[s] = total;
    }
    return f;
}

FlagVector flag_h(const FlagVector& f) {
    FlagVector h;
    for (const auto& [s, _] : f) {
        Integer acc = 0;
        // iterate over all subsets t of s
        for (SubsetMask t = s;; t = (t - 1) & s) {
            auto it = f.find(t);
            if (it != f.end()) {
                const int diff = std::popcount(s & ~t);
                acc += diff % 2 == 0 ? it->second : Integer(-it->second);
            }
            if (t == 0) break;
        }
        h[s] = acc;
    }
    return h;
}

FlagVector flag_f_from_h(const FlagVector& h) {
    FlagVector f;
    for (const auto& [s, _] : h) {
        Integer acc = 0;
        for (SubsetMask t = s;; t = (t - 1) & s) {
            if (auto it = h.find(t); it != h.end()) acc += it->second;
            if (t == 0) break;
        }
        f[s] = acc;
    }
    return f;
}

AbPoly ab_index(const GradedPoset& p) {
    if (p.rank() == 0) throw DomainError("ab_index: the poset must have rank at least 1");
    const unsigned n = p.rank() - 1;
    AbPoly out;
    for (const auto& [s, h] : flag_h(flag_f(p))) out.add_term(abindex::word_of_set(s, n), h);
    return out;
}

AbPoly ab_index_via_f(const GradedPoset& p) {
    if (p.rank() == 0) throw DomainError("ab_index: the poset must have rank at least 1");
    const unsigned n = p.rank() - 1;
    AbPoly out;
    for (const auto& [s, f] : flag_f(p)) out += abindex::vpoly_of_set(s, n) * f;
    return out;
}

// ---------------------------------------------------------------- Mobius

std::vector<Integer> mobius_from(const GradedPoset& p, ElementId x) {
    std::vector<Integer> mu(p.size(), 0);
    mu[x] = 1;
    std::vector<ElementId> seen{x};  // elements of [x, ...) already evaluated
    for (unsigned r = p.rank_of(x) + 1; r <= p.rank(); ++r) {
        std::vector<ElementId> this_level;
        for (ElementId y : p.level(r)) {
            if (!p.leq(x, y)) continue;
            Integer acc = 0;
            for (ElementId z : seen)
                if (p.leq(z, y)) acc += mu[z];
            mu[y] = -acc;
            this_level.push_back(y);
        }
        seen.insert(seen.end(), this_level.begin(), this_level.end());
    }
    return mu;
}

Integer mobius(const GradedPoset& p, ElementId x, ElementId y) {
    if (x >= p.size() || y >= p.size()) throw DomainError("mobius: element index out of range");
    if (!p.leq(x, y)) throw DomainError("mobius: \"" + p.name(x) + "\" is not below \"" + p.name(y) + "\"");
    return mobius_from(p, x)[y];
}

bool is_eulerian(const GradedPoset& p) {
    for (ElementId x = 0; x < p.size(); ++x) {
        const auto mu = mobius_from(p, x);
        for (ElementId y = 0; y < p.size(); ++y) {
            if (!p.leq(x, y)) continue;
            const unsigned d = p.rank_of(y) - p.rank_of(x);
            if (mu[y] != (d % 2 == 0 ? 1 : -1)) return false;
        }
    }
    return true;
}

bool is_simplicial(const GradedPoset& p) {
    const auto atoms_all = p.rank() >= 1 ? p.level(1) : std::span<const ElementId>{};
    for (ElementId x = 0; x < p.size(); ++x) {
        if (x == p.top()) continue;
        const unsigned r = p.rank_of(x);
        std::vector<ElementId> atoms;
        for (ElementId a : atoms_all)
            if (p.leq(a, x)) atoms.push_back(a);
        if (atoms.size() != r || r >= 64) return false;
        const auto members = p.interval_elements(p.bottom(), x);
        if (members.size() != (std::size_t{1} << r)) return false;
        std::vector<SubsetMask> mask(members.size(), 0);
        std::set<SubsetMask> distinct;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t k = 0; k < atoms.size(); ++k)
                if (p.leq(atoms[k], members[i])) mask[i] |= SubsetMask{1} << k;
            distinct.insert(mask[i]);
        }
        if (distinct.size() != members.size()) return false;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j) {
                const bool below = p.leq(members[i], members[j]);
                const bool subset = (mask[i] & ~mask[j]) == 0;
                if (below != subset) return false;
            }
    }
    return true;
}

std::vector<Integer> f_vector(const GradedPoset& p) {
    if (p.rank() == 0) throw DomainError("f_vector: the poset must have rank at least 1");
    const unsigned n = p.rank() - 1;
    std::vector<Integer> f(n + 1);
    f[0] = 1;
    for (unsigned i = 1; i <= n; ++i) f[i] = p.level(i).size();
    return f;
}

QPoly h_polynomial(const GradedPoset& p) {
    if (!is_simplicial(p)) throw DomainError("h_polynomial: the poset is not simplicial");
    const auto f = f_vector(p);
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    const QPoly one_minus_q = QPoly::from_coefficients({1, -1});
    QPoly h;
    for (unsigned i = 0; i <= n; ++i) h += QPoly::monomial(i, f[i]) * qarith::pow(one_minus_q, n - i);
    return h;
}

// ---------------------------------------------------------------- products

GradedPoset cartesian_product(const GradedPoset& p, const GradedPoset& q) {
    Builder b;
    auto id = [&](ElementId x, ElementId y) { return x * q.size() + y; };
    for (ElementId x = 0; x < p.size(); ++x)
        for (ElementId y = 0; y < q.size(); ++y) b.add("(" + p.name(x) + "," + q.name(y) + ")");
    for (ElementId x = 0; x < p.size(); ++x)
        for (ElementId y = 0; y < q.size(); ++y) {
            for (ElementId x2 : p.upper_covers(x)) b.cover(id(x, y), id(x2, y));
            for (ElementId y2 : q.upper_covers(y)) b.cover(id(x, y), id(x, y2));
        }
    return b.build();
}

GradedPoset dual_diamond(const GradedPoset& p, const GradedPoset& q) {
    if (p.rank() < 1 || q.rank() < 1) throw DomainError("dual_diamond: both operands need rank at least 1");
    Builder b;
    std::vector<ElementId> px, qy;
    for (ElementId x = 0; x < p.size(); ++x)
        if (x != p.top()) px.push_back(x);
    for (ElementId y = 0; y < q.size(); ++y)
        if (y != q.top()) qy.push_back(y);
    std::unordered_map<ElementId, std::size_t> p_pos, q_pos;
    for (std::size_t i = 0; i < px.size(); ++i) p_pos[px[i]] = i;
    for (std::size_t j = 0; j < qy.size(); ++j) q_pos[qy[j]] = j;
    auto id = [&](std::size_t i, std::size_t j) { return i * qy.size() + j; };
    for (ElementId x : px)
        for (ElementId y : qy) b.add("(" + p.name(x) + "," + q.name(y) + ")");
    for (std::size_t i = 0; i < px.size(); ++i)
        for (std::size_t j = 0; j < qy.size(); ++j) {
            for (ElementId x2 : p.upper_covers(px[i]))
                if (x2 != p.top()) b.cover(id(i, j), id(p_pos.at(x2), j));
            for (ElementId y2 : q.upper_covers(qy[j]))
                if (y2 != q.top()) b.cover(id(i, j), id(i, q_pos.at(y2)));
        }
    const ElementId top = b.add(fresh_top_name(b.names));
    for (ElementId x : p.level(p.rank() - 1))
        for (ElementId y : q.level(q.rank() - 1)) b.cover(id(p_pos.at(x), q_pos.at(y)), top);
    return b.build();
}

GradedPoset pyr_poset(const GradedPoset& p) { return cartesian_product(p, boolean_algebra(1)); }

GradedPoset bipyr_poset(const GradedPoset& p) { return dual_diamond(p, boolean_algebra(2)); }

// ---------------------------------------------------------------- constructors

GradedPoset boolean_algebra(unsigned n) {
    if (n > 20) throw DomainError("boolean_algebra: rank above 20");
    Builder b;
    const SubsetMask count = SubsetMask{1} << n;
    for (SubsetMask s = 0; s < count; ++s) b.add(subset_name(s));
    for (SubsetMask s = 0; s < count; ++s)
        for (unsigned i = 0; i < n; ++i)
            if (!((s >> i) & 1U)) b.cover(s, s | (SubsetMask{1} << i));
    return b.build();
}

GradedPoset chain(unsigned n) {
    Builder b;
    for (unsigned i = 0; i <= n; ++i) b.add(std::to_string(i));
    for (unsigned i = 0; i < n; ++i) b.cover(i, i + 1);
    return b.build();
}

GradedPoset t_poset(unsigned n) {
    const GradedPoset base = boolean_algebra(n);
    Builder b;
    b.names.assign(base.size(), {});
    for (ElementId x = 0; x < base.size(); ++x) b.names[x] = base.name(x);
    b.covers = base.covers();
    const ElementId top = b.add(fresh_top_name(b.names));
    b.cover(base.top(), top);
    return b.build();
}

GradedPoset simplex_lattice(unsigned n) { return boolean_algebra(n + 1); }

GradedPoset cross_polytope(unsigned n) {
    if (n > 12) throw DomainError("cross_polytope: dimension above 12");
    // A face chooses, per coordinate, nothing / +i / -i; digit d of the
    // base-3 index encodes that choice.
    std::size_t count = 1;
    for (unsigned i = 0; i < n; ++i) count *= 3;
    Builder b;
    std::vector<std::size_t> pow3(n + 1, 1);
    for (unsigned i = 1; i <= n; ++i) pow3[i] = pow3[i - 1] * 3;
    std::vector<unsigned> size_of(count, 0);
    for (std::size_t f = 0; f < count; ++f) {
        std::string name = "{";
        bool first = true;
        for (unsigned i = 0; i < n; ++i) {
            const std::size_t digit = (f / pow3[i]) % 3;
            if (digit == 0) continue;
            if (!first) name += ',';
            name += (digit == 1 ? "+" : "-") + std::to_string(i + 1);
            first = false;
            ++size_of[f];
        }
        b.add(name + "}");
    }
    for (std::size_t f = 0; f < count; ++f)
        for (unsigned i = 0; i < n; ++i)
            if ((f / pow3[i]) % 3 == 0) {
                b.cover(f, f + pow3[i]);
                b.cover(f, f + 2 * pow3[i]);
            }
    const ElementId top = b.add(fresh_top_name(b.names));
    for (std::size_t f = 0; f < count; ++f)
        if (size_of[f] == n) b.cover(f, top);
    return b.build();
}

GradedPoset fan_poset(unsigned r) {
    if (r < 1) throw DomainError("fan_poset: needs at least one atom");
    Builder b;
    const ElementId bottom = b.add("0");
    std::vector<ElementId> atoms;
    for (unsigned k = 1; k <= r; ++k) atoms.push_back(b.add("a" + std::to_string(k)));
    const ElementId top = b.add("1");
    for (ElementId a : atoms) {
        b.cover(bottom, a);
        b.cover(a, top);
    }
    return b.build();
}

} // namespace majordex::poset
