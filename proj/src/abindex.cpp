#include "majordex/abindex.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <sstream>

#include "majordex/error.hpp"
#include "majordex/poset.hpp"

namespace majordex::abindex {

namespace {

SubsetMask low_mask(unsigned n) { return n >= 64 ? ~SubsetMask{0} : ((SubsetMask{1} << n) - 1); }

// Shared term-list parser for "2*ab - ba + 1" style input. `parse_word`
// converts the letter string of one monomial.
template <class Poly, class ParseWord>
Poly parse_terms(std::string_view text, ParseWord parse_word) {
    Poly out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw DomainError("empty polynomial text");
    if (text.substr(pos) == "0") return out;
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw DomainError("expected '+' or '-' at offset " + std::to_string(pos));
        }
        first = false;
        Integer coeff = 1;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        bool has_number = pos > start;
        if (has_number) coeff = Integer(std::string(text.substr(start, pos - start)));
        skip_ws();
        std::string letters;
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
        } else if (has_number) {
            // a bare number is the empty word with that coefficient
            out.add_term(parse_word(""), coeff * sign);
            continue;
        }
        start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        letters = std::string(text.substr(start, pos - start));
        if (letters.empty()) {
            if (pos < text.size() && text[pos] == '1') {
                ++pos;
            } else {
                throw DomainError("expected a word at offset " + std::to_string(pos));
            }
        }
        out.add_term(parse_word(letters), coeff * sign);
    }
    return out;
}

template <class Poly, class Key>
std::string render_terms(const Poly& p, std::string (*word_text)(const Key&)) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : p) {
        std::string mono = word_text(w);
        bool empty_word = mono == "1";
        Integer magnitude = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (empty_word) {
            os << magnitude;
        } else if (magnitude == 1) {
            os << mono;
        } else {
            os << magnitude << '*' << mono;
        }
    }
    return os.str();
}

// Leibniz extension of a derivation given by its images of a and b.
AbPoly apply_derivation(const AbPoly& p, const AbPoly& image_a, const AbPoly& image_b) {
    AbPoly out;
    for (const auto& [w, coeff] : p) {
        for (unsigned i = 1; i <= w.length(); ++i) {
            const AbPoly& image = w.is_b(i) ? image_b : image_a;
            AbWord before = w.prefix(i - 1);
            AbWord after = w.suffix_from(i + 1);
            for (const auto& [mid, c] : image) out.add_term(before * mid * after, coeff * c);
        }
    }
    return out;
}

} // namespace

SubsetMask subset_from_elements(const std::vector<int>& elements) {
    SubsetMask mask = 0;
    for (int e : elements) {
        if (e < 1 || e > 64) throw DomainError("subset element " + std::to_string(e) + " outside 1..64");
        mask |= SubsetMask{1} << (e - 1);
    }
    return mask;
}

std::vector<int> subset_elements(SubsetMask mask) {
    std::vector<int> out;
    for (int i = 1; mask != 0; ++i, mask >>= 1)
        if (mask & 1U) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------- AbWord

AbWord::AbWord(SubsetMask bits, unsigned length) : bits_(bits), length_(length) {
    if (length > max_length) throw DomainError("ab-word longer than 64 letters");
    if ((bits & ~low_mask(length)) != 0) throw DomainError("ab-word bits beyond its length");
}

AbWord AbWord::parse(std::string_view letters) {
    if (letters == "1") return {};
    SubsetMask bits = 0;
    unsigned i = 0;
    for (char ch : letters) {
        if (ch == 'b') {
            bits |= SubsetMask{1} << i;
        } else if (ch != 'a') {
            throw DomainError(std::string("invalid ab-word letter '") + ch + "'");
        }
        ++i;
    }
    return AbWord(bits, static_cast<unsigned>(letters.size()));
}

unsigned AbWord::b_count() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }

unsigned AbWord::b_position_sum() const noexcept {
    unsigned sum = 0;
    for (SubsetMask rest = bits_; rest != 0; rest &= rest - 1)
        sum += static_cast<unsigned>(std::countr_zero(rest)) + 1;
    return sum;
}

AbWord AbWord::prefix(unsigned count) const { return AbWord(bits_ & low_mask(count), count); }

AbWord AbWord::suffix_from(unsigned position) const {
    if (position > length_) return {};
    unsigned shift = position - 1;
    return AbWord(shift >= 64 ? 0 : bits_ >> shift, length_ - shift);
}

AbWord AbWord::reversed() const {
    SubsetMask out = 0;
    for (unsigned i = 0; i < length_; ++i)
        if ((bits_ >> i) & 1U) out |= SubsetMask{1} << (length_ - 1 - i);
    return AbWord(out, length_);
}

AbWord operator*(const AbWord& lhs, const AbWord& rhs) {
    if (lhs.length_ + rhs.length_ > AbWord::max_length) throw DomainError("ab-word longer than 64 letters");
    SubsetMask shifted = lhs.length_ >= 64 ? 0 : rhs.bits_ << lhs.length_;
    return AbWord(lhs.bits_ | shifted, lhs.length_ + rhs.length_);
}

std::strong_ordering operator<=>(const AbWord& lhs, const AbWord& rhs) {
    if (auto cmp = lhs.length_ <=> rhs.length_; cmp != 0) return cmp;
    SubsetMask diff = lhs.bits_ ^ rhs.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    // first differing position decides; the word holding b there is larger
    SubsetMask first = diff & (~diff + 1);
    return (lhs.bits_ & first) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::string to_string(const AbWord& w) {
    if (w.length() == 0) return "1";
    std::string s;
    for (unsigned i = 1; i <= w.length(); ++i) s += w.is_b(i) ? 'b' : 'a';
    return s;
}

// ---------------------------------------------------------------- AbPoly

AbPoly AbPoly::c() { return letter_a() + letter_b(); }

AbPoly AbPoly::d() { return AbPoly(AbWord::parse("ab")) + AbPoly(AbWord::parse("ba")); }

AbPoly AbPoly::parse(std::string_view text) {
    return parse_terms<AbPoly>(text, [](const std::string& letters) { return AbWord::parse(letters); });
}

std::optional<unsigned> AbPoly::homogeneous_degree() const {
    if (is_zero()) return std::nullopt;
    unsigned deg = begin()->first.length();
    for (const auto& [w, c] : *this)
        if (w.length() != deg) return std::nullopt;
    return deg;
}

AbPoly operator*(const AbPoly& lhs, const AbPoly& rhs) {
    AbPoly out;
    for (const auto& [w1, c1] : lhs)
        for (const auto& [w2, c2] : rhs) out.add_term(w1 * w2, c1 * c2);
    return out;
}

std::string to_string(const AbPoly& p) { return render_terms<AbPoly, AbWord>(p, &to_string); }

std::ostream& operator<<(std::ostream& os, const AbPoly& p) { return os << to_string(p); }

// ---------------------------------------------------------------- cd side

CdWord::CdWord(std::string letters) : letters_(std::move(letters)) {
    for (char ch : letters_)
        if (ch != 'c' && ch != 'd') throw DomainError(std::string("invalid cd-word letter '") + ch + "'");
}

unsigned CdWord::weight() const noexcept {
    unsigned w = 0;
    for (char ch : letters_) w += ch == 'c' ? 1 : 2;
    return w;
}

std::strong_ordering operator<=>(const CdWord& lhs, const CdWord& rhs) {
    if (auto cmp = lhs.weight() <=> rhs.weight(); cmp != 0) return cmp;
    return lhs.letters_.compare(rhs.letters_) <=> 0;
}

std::string to_string(const CdWord& w) { return w.letters().empty() ? "1" : w.letters(); }

CdPoly CdPoly::parse(std::string_view text) {
    return parse_terms<CdPoly>(text, [](const std::string& letters) { return CdWord(letters); });
}

CdPoly operator*(const CdPoly& lhs, const CdPoly& rhs) {
    CdPoly out;
    for (const auto& [w1, c1] : lhs)
        for (const auto& [w2, c2] : rhs) out.add_term(w1 * w2, c1 * c2);
    return out;
}

std::string to_string(const CdPoly& p) { return render_terms<CdPoly, CdWord>(p, &to_string); }

std::ostream& operator<<(std::ostream& os, const CdPoly& p) { return os << to_string(p); }

std::vector<CdWord> cd_words_of_weight(unsigned weight) {
    std::vector<std::vector<std::string>> by_weight(weight + 1);
    by_weight[0] = {""};
    for (unsigned w = 1; w <= weight; ++w) {
        for (const auto& s : by_weight[w - 1]) by_weight[w].push_back(s + 'c');
        if (w >= 2)
            for (const auto& s : by_weight[w - 2]) by_weight[w].push_back(s + 'd');
    }
    std::vector<CdWord> out;
    out.reserve(by_weight[weight].size());
    for (auto& s : by_weight[weight]) out.emplace_back(std::move(s));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- maps

qarith::QPoly theta(const AbPoly& p) {
    qarith::QPoly out;
    for (const auto& [w, c] : p) out += qarith::QPoly::monomial(w.b_position_sum(), c);
    return out;
}

qarith::QTPoly theta_qt(const AbPoly& p) {
    qarith::QTPoly out;
    for (const auto& [w, c] : p) out += qarith::QTPoly::monomial(w.b_position_sum(), w.b_count(), c);
    return out;
}

AbPoly derivation_g(const AbPoly& p) {
    static const AbPoly image_a(AbWord::parse("ba"));
    static const AbPoly image_b(AbWord::parse("ab"));
    return apply_derivation(p, image_a, image_b);
}

AbPoly derivation_d(const AbPoly& p) {
    static const AbPoly image = AbPoly::d();
    return apply_derivation(p, image, image);
}

AbPoly pyr_op(const AbPoly& p) { return derivation_g(p) + p * AbPoly::c(); }

AbPoly bipyr_op(const AbPoly& p) { return derivation_d(p) + AbPoly::c() * p; }

AbPoly expand_cd(const CdWord& w) {
    static const AbPoly c = AbPoly::c();
    static const AbPoly d = AbPoly::d();
    AbPoly out = AbPoly::one();
    for (char ch : w.letters()) out = out * (ch == 'c' ? c : d);
    return out;
}

AbPoly expand_cd(const CdPoly& p) {
    AbPoly out;
    for (const auto& [w, coeff] : p) out += expand_cd(w) * coeff;
    return out;
}

std::optional<CdPoly> to_cd(const AbPoly& p) {
    if (p.is_zero()) return CdPoly();
    auto degree = p.homogeneous_degree();
    if (!degree) throw DomainError("to_cd: input is not homogeneous");

    // Under the lexicographic order with a < b, the largest word in the
    // expansion of a cd-word is obtained by c -> b, d -> ba. Distinct
    // cd-words have distinct leading words, each with coefficient 1, so the
    // system is unitriangular; both facts are checked as the basis is built.
    std::map<AbWord, std::pair<CdWord, AbPoly>> by_leading_word;
    for (const CdWord& cw : cd_words_of_weight(*degree)) {
        AbPoly expansion = expand_cd(cw);
        const auto& [lead, lead_coeff] = *expansion.terms().rbegin();
        if (lead_coeff != 1) throw InternalError("to_cd: leading coefficient is not 1 for " + cw.letters());
        AbWord key = lead;
        auto [it, inserted] = by_leading_word.try_emplace(key, cw, std::move(expansion));
        if (!inserted) throw InternalError("to_cd: two cd-words share the leading word " + to_string(key));
    }

    AbPoly remainder = p;
    CdPoly result;
    while (!remainder.is_zero()) {
        const auto& [lead, coeff] = *remainder.terms().rbegin();
        auto it = by_leading_word.find(lead);
        if (it == by_leading_word.end()) return std::nullopt;
        Integer c = coeff;
        result.add_term(it->second.first, c);
        remainder -= it->second.second * c;
    }
    return result;
}

AbPoly reverse(const AbPoly& p) {
    AbPoly out;
    for (const auto& [w, c] : p) out.add_term(w.reversed(), c);
    return out;
}

AbWord word_of_set(SubsetMask s, unsigned n) {
    if (n > AbWord::max_length) throw DomainError("word_of_set: degree above 64");
    if ((s & ~low_mask(n)) != 0) throw DomainError("word_of_set: set is not contained in {1.." + std::to_string(n) + "}");
    return AbWord(s, n);
}

AbWord word_of_set(const std::vector<int>& s, unsigned n) {
    for (int e : s)
        if (e < 1 || e > static_cast<int>(n))
            throw DomainError("word_of_set: element " + std::to_string(e) + " outside {1.." + std::to_string(n) + "}");
    return word_of_set(subset_from_elements(s), n);
}

AbPoly vpoly_of_set(SubsetMask s, unsigned n) {
    word_of_set(s, n);  // range check
    static const AbPoly a_minus_b = AbPoly::letter_a() - AbPoly::letter_b();
    static const AbPoly b = AbPoly::letter_b();
    AbPoly out = AbPoly::one();
    for (unsigned i = 0; i < n; ++i) out = out * (((s >> i) & 1U) ? b : a_minus_b);
    return out;
}

std::vector<int> set_of_word(const AbWord& w) { return subset_elements(w.bits()); }

CdPoly shelling_component(unsigned n, unsigned i) {
    if (n == 0) throw DomainError("shelling_component: n must be positive");
    if (i > n) throw DomainError("shelling_component: i must not exceed n");
    if (i == n) return CdPoly();
    AbPoly current = poset::ab_index(poset::boolean_algebra(n - i)) * AbPoly::c();
    for (unsigned k = 0; k < i; ++k) current = derivation_g(current);
    auto cd = to_cd(current);
    if (!cd) throw InternalError("shelling_component: result is not a cd-polynomial");
    return *cd;
}

} // namespace majordex::abindex
