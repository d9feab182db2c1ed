#include "majordex/cli/expr.hpp"

#include <cctype>
#include <charconv>

#include "majordex/cli/poset_io.hpp"

namespace majordex::cli {

ParseError::ParseError(const std::string& message, std::size_t position, std::size_t line, std::size_t column)
    : Error("E_PARSE", message), position_(position), line_(line), column_(column) {}

namespace {

struct AtomSpec {
    const char* name;
    int min, max;
};

constexpr AtomSpec kAtoms[] = {
    {"B", 0, 20}, {"chain", 0, 64}, {"T", 0, 20}, {"cross", 0, 12}, {"simplex", 0, 19}, {"fan", 1, 64},
};

const AtomSpec* find_atom(std::string_view name) {
    for (const AtomSpec& a : kAtoms)
        if (name == a.name) return &a;
    return nullptr;
}

enum class Tok { Ident, Int, LParen, RParen, Comma, Star, Diamond, At, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;  // 0-based
};

std::string describe(const Token& t) {
    switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::Int: return "integer " + t.text;
    case Tok::At: return "file reference";
    default: return "'" + t.text + "'";
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) { advance(); }

    PosetExpr parse() {
        PosetExpr e = expr();
        if (tok_.kind != Tok::End) fail("expected '*', '<>' or end of input", tok_);
        return e;
    }

private:
    [[noreturn]] void fail_at(const std::string& what, std::size_t offset) const {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                             " (position " + std::to_string(offset + 1) + "): " + what,
                         offset + 1, line, column);
    }

    [[noreturn]] void fail(const std::string& expected, const Token& found) const {
        fail_at(expected + ", found " + describe(found), found.offset);
    }

    void advance() {
        std::size_t i = pos_;
        while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
        const std::size_t start = i;
        if (i == text_.size()) {
            tok_ = {Tok::End, "", i};
            pos_ = i;
            return;
        }
        const char c = text_[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_')) ++i;
            tok_ = {Tok::Ident, std::string(text_.substr(start, i - start)), start};
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            ++i;
            while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
            if (c == '-' && i == start + 1) fail_at("unexpected character '-'", start);
            tok_ = {Tok::Int, std::string(text_.substr(start, i - start)), start};
        } else if (c == '<') {
            if (i + 1 >= text_.size() || text_[i + 1] != '>') fail_at("expected '<>'", start);
            i += 2;
            tok_ = {Tok::Diamond, "<>", start};
        } else if (c == '@') {
            ++i;
            std::string path;
            if (i < text_.size() && text_[i] == '"') {
                const std::size_t close = text_.find('"', i + 1);
                if (close == std::string_view::npos) fail_at("unterminated quoted path", i);
                path = std::string(text_.substr(i + 1, close - i - 1));
                i = close + 1;
            } else {
                while (i < text_.size() && !std::isspace(static_cast<unsigned char>(text_[i])) &&
                       text_[i] != ')' && text_[i] != ',' && text_[i] != '*' && text_[i] != '<')
                    path += text_[i++];
            }
            if (path.empty()) fail_at("expected a file path after '@'", start);
            tok_ = {Tok::At, path, start};
        } else {
            ++i;
            Tok kind;
            switch (c) {
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case ',': kind = Tok::Comma; break;
            case '*': kind = Tok::Star; break;
            default: fail_at(std::string("unexpected character '") + c + "'", start);
            }
            tok_ = {kind, std::string(1, c), start};
        }
        pos_ = i;
    }

    void expect(Tok kind, const char* what) {
        if (tok_.kind != kind) fail(std::string("expected ") + what, tok_);
        advance();
    }

    PosetExpr expr() {
        PosetExpr left = term();
        while (tok_.kind == Tok::Star || tok_.kind == Tok::Diamond) {
            const auto kind = tok_.kind == Tok::Star ? PosetExpr::Kind::Product : PosetExpr::Kind::Diamond;
            advance();
            PosetExpr right = term();
            PosetExpr node;
            node.kind = kind;
            node.position = left.position;
            node.children.push_back(std::move(left));
            node.children.push_back(std::move(right));
            left = std::move(node);
        }
        return left;
    }

    PosetExpr term() {
        PosetExpr e;
        e.position = tok_.offset + 1;
        switch (tok_.kind) {
        case Tok::LParen: {
            advance();
            PosetExpr inner = expr();
            expect(Tok::RParen, "')'");
            return inner;
        }
        case Tok::At:
            e.kind = PosetExpr::Kind::File;
            e.path = tok_.text;
            advance();
            return e;
        case Tok::Ident: break;
        default: fail("expected a constructor, '@file' or '('", tok_);
        }

        const Token name = tok_;
        const AtomSpec* atom = find_atom(name.text);
        const bool unary = name.text == "pyr" || name.text == "bipyr";
        if (!atom && !unary) {
            fail_at("unknown constructor '" + name.text +
                        "' (known: B, chain, T, cross, simplex, fan, pyr, bipyr)",
                    name.offset);
        }
        advance();
        expect(Tok::LParen, "'('");

        if (unary) {
            e.kind = name.text == "pyr" ? PosetExpr::Kind::Pyr : PosetExpr::Kind::Bipyr;
            if (tok_.kind == Tok::RParen) fail_at(name.text + " expects 1 argument, got 0", name.offset);
            e.children.push_back(expr());
            check_single_argument(name);
            return e;
        }

        e.kind = PosetExpr::Kind::Atom;
        e.name = name.text;
        if (tok_.kind == Tok::RParen) fail_at(name.text + " expects 1 argument, got 0", name.offset);
        if (tok_.kind != Tok::Int) fail("expected an integer argument", tok_);
        const Token arg = tok_;
        int value = 0;
        const auto [ptr, ec] = std::from_chars(arg.text.data(), arg.text.data() + arg.text.size(), value);
        if (ec != std::errc() || ptr != arg.text.data() + arg.text.size() || value < atom->min || value > atom->max) {
            fail_at(name.text + " argument must lie in " + std::to_string(atom->min) + ".." +
                        std::to_string(atom->max) + ", got " + arg.text,
                    arg.offset);
        }
        e.argument = value;
        advance();
        check_single_argument(name);
        return e;
    }

    // After the first argument: either ')' or a surplus argument list.
    void check_single_argument(const Token& name) {
        if (tok_.kind == Tok::Comma) {
            std::size_t count = 1;
            int depth = 0;
            while (tok_.kind != Tok::End && !(depth == 0 && tok_.kind == Tok::RParen)) {
                if (tok_.kind == Tok::Comma && depth == 0) ++count;
                if (tok_.kind == Tok::LParen) ++depth;
                if (tok_.kind == Tok::RParen) --depth;
                advance();
            }
            fail_at(name.text + " expects 1 argument, got " + std::to_string(count), name.offset);
        }
        expect(Tok::RParen, "',' or ')'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token tok_{Tok::End, "", 0};
};

std::string quote_path(const std::string& path) {
    for (char c : path)
        if (std::isspace(static_cast<unsigned char>(c)) || c == ')' || c == ',' || c == '*' || c == '<')
            return "@\"" + path + "\"";
    return "@" + path;
}

poset::GradedPoset build_atom(const std::string& name, int n) {
    const auto u = static_cast<unsigned>(n);
    if (name == "B") return poset::boolean_algebra(u);
    if (name == "chain") return poset::chain(u);
    if (name == "T") return poset::t_poset(u);
    if (name == "cross") return poset::cross_polytope(u);
    if (name == "simplex") return poset::simplex_lattice(u);
    return poset::fan_poset(u);
}

std::filesystem::path resolve(const std::string& path, const std::filesystem::path& base_dir) {
    std::filesystem::path p(path);
    return p.is_relative() && !base_dir.empty() ? base_dir / p : p;
}

} // namespace

PosetExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const PosetExpr& e) {
    switch (e.kind) {
    case PosetExpr::Kind::Atom: return e.name + "(" + std::to_string(e.argument) + ")";
    case PosetExpr::Kind::File: return quote_path(e.path);
    case PosetExpr::Kind::Pyr: return "pyr(" + to_string(e.children[0]) + ")";
    case PosetExpr::Kind::Bipyr: return "bipyr(" + to_string(e.children[0]) + ")";
    case PosetExpr::Kind::Product:
    case PosetExpr::Kind::Diamond: {
        const PosetExpr& rhs = e.children[1];
        const bool wrap = rhs.kind == PosetExpr::Kind::Product || rhs.kind == PosetExpr::Kind::Diamond;
        return to_string(e.children[0]) + (e.kind == PosetExpr::Kind::Product ? " * " : " <> ") +
               (wrap ? "(" + to_string(rhs) + ")" : to_string(rhs));
    }
    }
    return {};
}

poset::GradedPoset evaluate(const PosetExpr& e, const std::filesystem::path& base_dir) {
    switch (e.kind) {
    case PosetExpr::Kind::Atom: return build_atom(e.name, e.argument);
    case PosetExpr::Kind::File: return read_poset_file(resolve(e.path, base_dir)).poset;
    case PosetExpr::Kind::Pyr: return poset::pyr_poset(evaluate(e.children[0], base_dir));
    case PosetExpr::Kind::Bipyr: return poset::bipyr_poset(evaluate(e.children[0], base_dir));
    case PosetExpr::Kind::Product:
        return poset::cartesian_product(evaluate(e.children[0], base_dir), evaluate(e.children[1], base_dir));
    case PosetExpr::Kind::Diamond:
        return poset::dual_diamond(evaluate(e.children[0], base_dir), evaluate(e.children[1], base_dir));
    }
    throw InternalError("unhandled expression kind");
}

LoadedPoset evaluate_with_labels(const PosetExpr& e, const std::filesystem::path& base_dir) {
    if (e.kind == PosetExpr::Kind::File) {
        PosetDocument doc = read_poset_file(resolve(e.path, base_dir));
        return {std::move(doc.poset), std::move(doc.labels)};
    }
    return {evaluate(e, base_dir), std::nullopt};
}

} // namespace majordex::cli
