#include "majordex/rlabel.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace majordex::rlabel {

using poset::Cover;
using poset::ElementId;
using poset::GradedPoset;

Label Label::parse(std::string_view text) {
    auto fail = [&] { return DomainError("invalid label \"" + std::string(text) + "\""); };
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw fail();
        std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (k == s.size()) throw fail();
        for (std::size_t i = k; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw fail();
        return std::stoi(std::string(s));
    };
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "0") return zero();
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')') throw fail();
        std::string_view inner = text.substr(1, text.size() - 2);
        auto comma = inner.find(',');
        if (comma == std::string_view::npos) throw fail();
        return pair(parse_int(trim(inner.substr(0, comma))), parse_int(trim(inner.substr(comma + 1))));
    }
    return integer(parse_int(text));
}

std::string to_string(const Label& l) {
    switch (l.kind) {
    case Label::Kind::Integer: return std::to_string(l.first);
    case Label::Kind::Pair: return "(" + std::to_string(l.first) + "," + std::to_string(l.second) + ")";
    case Label::Kind::Zero: return "0";
    }
    return "?";
}

std::strong_ordering standard_label_order(const Label& lhs, const Label& rhs) {
    using K = Label::Kind;
    auto as_scalar = [](const Label& l) { return l.kind == K::Zero ? 0 : l.first; };
    if (lhs.kind != K::Pair && rhs.kind != K::Pair) return as_scalar(lhs) <=> as_scalar(rhs);
    if (lhs.kind == K::Pair && rhs.kind == K::Pair) {
        if (auto c = lhs.first <=> rhs.first; c != 0) return c;
        return lhs.second <=> rhs.second;
    }
    const Label& pair = lhs.kind == K::Pair ? lhs : rhs;
    const Label& other = lhs.kind == K::Pair ? rhs : lhs;
    if (other.kind == K::Integer)
        throw DomainError("labels " + to_string(lhs) + " and " + to_string(rhs) + " are not comparable");
    // zero < (j, i) iff j > 0
    const auto zero_vs_pair = pair.first > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (lhs.kind == K::Zero) return zero_vs_pair;
    return zero_vs_pair == std::strong_ordering::less ? std::strong_ordering::greater : std::strong_ordering::less;
}

// ---------------------------------------------------------------- LabeledPoset

LabeledPoset::LabeledPoset(GradedPoset poset, std::map<Cover, Label> labels, LabelOrder order)
    : poset_(std::move(poset)), labels_(std::move(labels)), order_(std::move(order)) {
    std::size_t cover_count = 0;
    for (ElementId x = 0; x < poset_.size(); ++x) {
        for (ElementId y : poset_.upper_covers(x)) {
            ++cover_count;
            if (!labels_.count({x, y}))
                throw DomainError("cover [\"" + poset_.name(x) + "\", \"" + poset_.name(y) + "\"] has no label");
        }
    }
    if (labels_.size() != cover_count) throw DomainError("a label is attached to a pair that is not a cover");
}

const Label& LabeledPoset::label(ElementId lower, ElementId upper) const {
    auto it = labels_.find({lower, upper});
    if (it == labels_.end()) throw DomainError("no cover between the given elements");
    return it->second;
}

// ---------------------------------------------------------------- checks

RLabelingCheck is_r_labeling(const LabeledPoset& lp) {
    const GradedPoset& p = lp.poset();
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 4;

    // Cover (down[y][k], y) gets id first[y] + k.
    std::vector<std::size_t> first(p.size() + 1, 0);
    for (ElementId y = 0; y < p.size(); ++y) first[y + 1] = first[y] + p.lower_covers(y).size();
    const auto cover_id = [&](ElementId z, ElementId y) {
        const auto down = p.lower_covers(y);
        return first[y] + static_cast<std::size_t>(std::find(down.begin(), down.end(), z) - down.begin());
    };
    // rises[c] lists the covers (w, z) that may precede c = (z, y) in a
    // weakly increasing chain; this does not depend on the interval.
    std::vector<std::size_t> rise_first(first.back() + 1, 0);
    std::vector<std::size_t> rises;
    for (ElementId y = 0; y < p.size(); ++y) {
        for (ElementId z : p.lower_covers(y)) {
            const Label& next = lp.label(z, y);
            for (ElementId w : p.lower_covers(z))
                if (lp.compare(lp.label(w, z), next) <= 0) rises.push_back(cover_id(w, z));
            rise_first[cover_id(z, y) + 1] = rises.size();
        }
    }

    RLabelingCheck result;
    // increasing[c]: weakly increasing chains from x ending with cover c,
    // valid only when stamp[c] == x.
    std::vector<std::uint64_t> increasing(first.back(), 0);
    std::vector<ElementId> stamp(first.back(), p.size());
    for (ElementId x = 0; x < p.size(); ++x) {
        for (unsigned r = p.rank_of(x) + 1; r <= p.rank(); ++r) {
            for (ElementId y : p.level(r)) {
                if (!p.leq(x, y)) continue;
                std::uint64_t total = 0;
                const auto down = p.lower_covers(y);
                for (std::size_t k = 0; k < down.size(); ++k) {
                    const ElementId z = down[k];
                    if (!p.leq(x, z)) continue;
                    const std::size_t c = first[y] + k;
                    std::uint64_t count = 0;
                    if (z == x) {
                        count = 1;
                    } else {
                        for (std::size_t i = rise_first[c]; i < rise_first[c + 1]; ++i)
                            if (stamp[rises[i]] == x) count = std::min(cap, count + increasing[rises[i]]);
                    }
                    increasing[c] = count;
                    stamp[c] = x;
                    total = std::min(cap, total + count);
                }
                if (total != 1) {
                    result.ok = false;
                    result.witness = {x, y};
                    result.increasing_chains = static_cast<std::size_t>(total);
                    return result;
                }
            }
        }
    }
    return result;
}

namespace {

template <class Visit>
void for_each_maximal_chain(const LabeledPoset& lp, Visit visit) {
    const GradedPoset& p = lp.poset();
    std::vector<Label> labels;
    labels.reserve(p.rank());
    auto descend = [&](auto&& self, ElementId x) -> void {
        if (x == p.top()) {
            visit(labels);
            return;
        }
        for (ElementId y : p.upper_covers(x)) {
            labels.push_back(lp.label(x, y));
            self(self, y);
            labels.pop_back();
        }
    };
    descend(descend, p.bottom());
}

} // namespace

std::vector<std::vector<Label>> jordan_holder_set(const LabeledPoset& lp) {
    std::vector<std::vector<Label>> out;
    for_each_maximal_chain(lp, [&](const std::vector<Label>& labels) { out.push_back(labels); });
    return out;
}

std::vector<abindex::AbWord> jordan_holder_words(const LabeledPoset& lp) {
    if (lp.poset().rank() == 0) throw DomainError("jordan_holder_words: rank must be at least 1");
    std::vector<abindex::AbWord> out;
    for_each_maximal_chain(lp, [&](const std::vector<Label>& labels) {
        abindex::SubsetMask descents = 0;
        for (std::size_t i = 0; i + 1 < labels.size(); ++i)
            if (lp.compare(labels[i], labels[i + 1]) > 0) descents |= abindex::SubsetMask{1} << i;
        out.emplace_back(descents, static_cast<unsigned>(labels.size() - 1));
    });
    return out;
}

abindex::AbPoly bs_sum(const LabeledPoset& lp) {
    auto check = is_r_labeling(lp);
    if (!check.ok) {
        const auto& [x, y] = *check.witness;
        throw DomainError("bs_sum: not an R-labeling; interval [\"" + lp.poset().name(x) + "\", \"" +
                          lp.poset().name(y) + "\"] has " + std::to_string(check.increasing_chains) +
                          " weakly increasing maximal chains");
    }
    const GradedPoset& p = lp.poset();
    if (p.rank() == 0) throw DomainError("bs_sum: rank must be at least 1");
    // Same walk as jordan_holder_words, tallying descent sets by bitmask.
    std::vector<std::vector<const Label*>> up_labels(p.size());
    for (ElementId x = 0; x < p.size(); ++x)
        for (ElementId y : p.upper_covers(x)) up_labels[x].push_back(&lp.label(x, y));
    std::vector<std::uint64_t> counts(std::size_t{1} << (p.rank() - 1), 0);
    auto descend = [&](auto&& self, ElementId x, const Label* previous, unsigned depth,
                       abindex::SubsetMask descents) -> void {
        if (x == p.top()) {
            ++counts[descents];
            return;
        }
        const auto ups = p.upper_covers(x);
        for (std::size_t k = 0; k < ups.size(); ++k) {
            const Label* next = up_labels[x][k];
            abindex::SubsetMask d = descents;
            if (previous && lp.compare(*previous, *next) > 0) d |= abindex::SubsetMask{1} << (depth - 1);
            self(self, ups[k], next, depth + 1, d);
        }
    };
    descend(descend, p.bottom(), nullptr, 0, 0);
    abindex::AbPoly out;
    for (std::size_t mask = 0; mask < counts.size(); ++mask)
        if (counts[mask] != 0) out.add_term(abindex::AbWord(mask, p.rank() - 1), Integer(counts[mask]));
    return out;
}

// ---------------------------------------------------------------- constructions

LabeledPoset labeled_cartesian_product(const LabeledPoset& p, const LabeledPoset& q) {
    GradedPoset product = poset::cartesian_product(p.poset(), q.poset());
    const std::size_t qn = q.poset().size();
    std::map<Cover, Label> labels;
    for (ElementId x = 0; x < p.poset().size(); ++x)
        for (ElementId y = 0; y < qn; ++y) {
            for (ElementId x2 : p.poset().upper_covers(x)) labels[{x * qn + y, x2 * qn + y}] = p.label(x, x2);
            for (ElementId y2 : q.poset().upper_covers(y)) labels[{x * qn + y, x * qn + y2}] = q.label(y, y2);
        }
    return LabeledPoset(std::move(product), std::move(labels));
}

LabeledPoset labeled_dual_diamond(const LabeledPoset& p, const LabeledPoset& q, const Label& top_label) {
    GradedPoset product = poset::dual_diamond(p.poset(), q.poset());
    const GradedPoset& pp = p.poset();
    const GradedPoset& qq = q.poset();
    // non-top elements keep their relative order; see poset::dual_diamond
    std::vector<std::size_t> p_pos(pp.size()), q_pos(qq.size());
    std::size_t count = 0;
    for (ElementId x = 0; x < pp.size(); ++x)
        if (x != pp.top()) p_pos[x] = count++;
    const std::size_t qn = qq.size() - 1;
    count = 0;
    for (ElementId y = 0; y < qq.size(); ++y)
        if (y != qq.top()) q_pos[y] = count++;
    auto id = [&](ElementId x, ElementId y) { return p_pos[x] * qn + q_pos[y]; };

    std::map<Cover, Label> labels;
    for (ElementId x = 0; x < pp.size(); ++x) {
        if (x == pp.top()) continue;
        for (ElementId y = 0; y < qq.size(); ++y) {
            if (y == qq.top()) continue;
            for (ElementId x2 : pp.upper_covers(x))
                if (x2 != pp.top()) labels[{id(x, y), id(x2, y)}] = p.label(x, x2);
            for (ElementId y2 : qq.upper_covers(y))
                if (y2 != qq.top()) labels[{id(x, y), id(x, y2)}] = q.label(y, y2);
        }
    }
    for (ElementId z : product.lower_covers(product.top())) labels[{z, product.top()}] = top_label;
    return LabeledPoset(std::move(product), std::move(labels));
}

LabeledPoset product_chain_labeling(const std::vector<int>& alpha) {
    if (alpha.empty()) throw DomainError("product_chain_labeling: empty composition");
    std::optional<LabeledPoset> result;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (alpha[k] < 1) throw DomainError("product_chain_labeling: parts must be positive");
        GradedPoset c = poset::chain(static_cast<unsigned>(alpha[k]));
        std::map<Cover, Label> labels;
        for (const auto& cover : c.covers()) labels[cover] = Label::integer(static_cast<int>(k) + 1);
        LabeledPoset factor(std::move(c), std::move(labels));
        result = result ? labeled_cartesian_product(*result, factor) : std::move(factor);
    }
    return *result;
}

LabeledPoset fan_labeling(unsigned r, int index) {
    GradedPoset fan = poset::fan_poset(r);
    std::map<Cover, Label> labels;
    // atoms are elements 1..r in order; see poset::fan_poset
    for (unsigned k = 1; k <= r; ++k) {
        const int j = k == 1 ? -1 : static_cast<int>(k);
        labels[{fan.bottom(), k}] = Label::pair(j, index);
        labels[{k, fan.top()}] = Label::zero();
    }
    return LabeledPoset(std::move(fan), std::move(labels));
}

LabeledPoset signed_labeling(const std::vector<int>& r) {
    if (r.empty()) throw DomainError("signed_labeling: empty vector");
    std::optional<LabeledPoset> result;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < 1) throw DomainError("signed_labeling: entries must be positive");
        LabeledPoset factor = fan_labeling(static_cast<unsigned>(r[i]), static_cast<int>(i) + 1);
        result = result ? labeled_dual_diamond(*result, factor, Label::zero()) : std::move(factor);
    }
    return *result;
}

} // namespace majordex::rlabel
