#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "majordex/error.hpp"
#include "majordex/poset.hpp"
#include "majordex/rlabel.hpp"

// Poset expressions:
//
//   expr := term (('*' | '<>') term)*
//   term := name '(' args ')' | '@' path | '(' expr ')'
//
// '*' is the Cartesian product and '<>' the dual diamond product; both are
// left-associative with equal precedence. Atoms are B(n), chain(n), T(n),
// cross(n), simplex(n) and fan(r); pyr(e) and bipyr(e) take an expression.
namespace majordex::cli {

class ParseError : public Error {
public:
    // `position` is the 1-based character position of the offending token.
    ParseError(const std::string& message, std::size_t position, std::size_t line, std::size_t column);
    std::size_t position() const noexcept { return position_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t position_, line_, column_;
};

struct PosetExpr {
    enum class Kind { Atom, File, Pyr, Bipyr, Product, Diamond };
    Kind kind = Kind::Atom;
    std::string name;                 // atom constructor name
    int argument = 0;                 // atom parameter
    std::string path;                 // file reference
    std::vector<PosetExpr> children;  // operands
    std::size_t position = 0;         // 1-based start of the term
};

PosetExpr parse_expr(std::string_view text);
// Canonical text form; parsing it gives back an equal tree.
std::string to_string(const PosetExpr& e);

// Builds the poset. Relative file paths resolve against `base_dir`.
poset::GradedPoset evaluate(const PosetExpr& e, const std::filesystem::path& base_dir = {});

// A poset together with cover labels, when its source provides them.
struct LoadedPoset {
    poset::GradedPoset poset;
    std::optional<std::map<poset::Cover, rlabel::Label>> labels;
};

// Like evaluate, but keeps the labels of a bare file reference.
LoadedPoset evaluate_with_labels(const PosetExpr& e, const std::filesystem::path& base_dir = {});

} // namespace majordex::cli
