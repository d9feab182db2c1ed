#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <string>

#include "majordex/abindex.hpp"
#include "majordex/cli/expr.hpp"
#include "majordex/cli/poset_io.hpp"
#include "majordex/cli/verify.hpp"
#include "majordex/poset.hpp"
#include "majordex/rlabel.hpp"

using namespace majordex;
using namespace majordex::cli;
using PK = PosetExpr::Kind;

namespace {

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "majordex_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

ParseError parse_failure(const std::string& text) {
    try {
        parse_expr(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no parse error for " << text);
    return ParseError("", 0, 0, 0);
}

SchemaError schema_failure(const std::string& text) {
    try {
        poset_from_json(nlohmann::json::parse(text));
    } catch (const SchemaError& e) {
        return e;
    }
    FAIL("no schema error for " << text);
    return SchemaError("", "");
}

} // namespace

TEST_CASE("expression parsing") {
    const PosetExpr e = parse_expr("bipyr(T(2))");
    CHECK(e.kind == PK::Bipyr);
    REQUIRE(e.children.size() == 1);
    CHECK(e.children[0].kind == PK::Atom);
    CHECK(e.children[0].name == "T");
    CHECK(e.children[0].argument == 2);

    // equal precedence, left-associative
    const PosetExpr chain3 = parse_expr("B(1) * chain(2) <> fan(3)");
    CHECK(chain3.kind == PK::Diamond);
    CHECK(chain3.children[0].kind == PK::Product);
    CHECK(to_string(chain3) == "B(1) * chain(2) <> fan(3)");
    CHECK(to_string(parse_expr("B(1) * (chain(2) <> fan(3))")) == "B(1) * (chain(2) <> fan(3))");
    CHECK(to_string(parse_expr("  pyr( ( cross(2) ) )")) == "pyr(cross(2))");
    CHECK(to_string(parse_expr("@\"my file.json\"")) == "@\"my file.json\"");
    CHECK(parse_expr("@p.json").path == "p.json");

    for (const char* text : {"B(3)", "pyr(bipyr(T(1))) <> simplex(2)", "(fan(2) * B(1)) * chain(0)"})
        CHECK(to_string(parse_expr(to_string(parse_expr(text)))) == to_string(parse_expr(text)));

    CHECK(poset::flag_f(evaluate(parse_expr("B(2) <> B(2)"))) == poset::flag_f(poset::cross_polytope(2)));
    CHECK(poset::flag_f(evaluate(parse_expr("bipyr(T(2))"))) ==
          poset::flag_f(poset::bipyr_poset(poset::t_poset(2))));
}

TEST_CASE("expression errors") {
    const ParseError e = parse_failure("B(2 *");
    CHECK(e.position() == 5);
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
    CHECK(e.code() == "E_PARSE");
    CHECK(std::string(e.what()).find("expected ',' or ')'") != std::string::npos);

    const ParseError multi = parse_failure("B(2) *\n  oops(1)");
    CHECK(multi.line() == 2);
    CHECK(multi.column() == 3);
    CHECK(std::string(multi.what()).find("unknown constructor 'oops'") != std::string::npos);

    CHECK(std::string(parse_failure("B(1, 2)").what()).find("expects 1 argument, got 2") != std::string::npos);
    CHECK(std::string(parse_failure("pyr()").what()).find("expects 1 argument, got 0") != std::string::npos);
    CHECK(std::string(parse_failure("fan(0)").what()).find("1..64") != std::string::npos);
    CHECK(parse_failure("B(2) B(2)").position() == 6);
    CHECK(parse_failure("").position() == 1);
    CHECK(parse_failure("B(2) < B(2)").position() == 6);
    CHECK(parse_failure("B(x)").position() == 3);
    CHECK(parse_failure("(B(2)").position() == 6);
}

TEST_CASE("JSON poset files") {
    const auto b2 = poset::boolean_algebra(2);
    const auto path = scratch("b2.json");
    write_poset_file(path, b2);
    const PosetDocument back = read_poset_file(path);
    CHECK(poset::flag_f(back.poset) == poset::flag_f(b2));
    CHECK_FALSE(back.labels);
    CHECK(poset_to_json(back.poset) == poset_to_json(b2));
    CHECK(poset::flag_f(evaluate(parse_expr("@" + path.string() + " * B(1)"))) ==
          poset::flag_f(poset::boolean_algebra(3)));
    CHECK(poset::flag_f(evaluate(parse_expr("@b2.json"), path.parent_path())) == poset::flag_f(b2));

    const rlabel::LabeledPoset fan = rlabel::fan_labeling(3, 1);
    const auto fan_path = scratch("fan3.json");
    write_poset_file(fan_path, fan.poset(), &fan.labels());
    const LoadedPoset loaded = evaluate_with_labels(parse_expr("@" + fan_path.string()));
    REQUIRE(loaded.labels);
    CHECK(*loaded.labels == fan.labels());
    const std::string text = poset_to_json(loaded.poset, &*loaded.labels).dump();
    CHECK(text.find("\"(-1,1)\"") != std::string::npos);
    CHECK(rlabel::bs_sum(rlabel::LabeledPoset(loaded.poset, *loaded.labels)) == poset::ab_index(loaded.poset));

    CHECK_THROWS_AS(read_poset_file(scratch("does-not-exist.json")), IoError);
}

TEST_CASE("JSON schema errors") {
    CHECK(schema_failure(R"({"elements": ["0", "1"]})").key() == "covers");
    CHECK(schema_failure(R"({"covers": []})").key() == "elements");
    CHECK(schema_failure(R"([1, 2])").key() == "<root>");
    CHECK(schema_failure(R"({"elements": ["0", 1], "covers": []})").key() == "elements[1]");
    CHECK(schema_failure(R"({"elements": ["0", "1"], "covers": [["0"]]})").key() == "covers[0]");
    CHECK(schema_failure(R"({"elements": ["0"], "covers": [], "extra": 1})").key() == "extra");
    CHECK(schema_failure(R"({"elements": ["0", "1"], "covers": [["0", "1"]], "labels": {"0-1": "1"}})").key() ==
          "labels[\"0-1\"]");
    CHECK(schema_failure(R"({"elements": ["0", "a", "1"], "covers": [["0", "a"], ["a", "1"]],
                             "labels": {"0|a": "1"}})")
              .key() == "labels");
    CHECK(schema_failure(R"({"elements": ["0", "a", "1"], "covers": [["0", "a"], ["a", "1"]],
                             "labels": {"0|1": "1", "0|a": "1", "a|1": "2"}})")
              .key() == "labels[\"0|1\"]");
    CHECK(schema_failure(R"({"elements": ["0", "1"], "covers": [["0", "1"]], "labels": {"0|1": "(1"}})").key() ==
          "labels[\"0|1\"]");
    CHECK_THROWS_AS(poset_from_json(nlohmann::json::parse(R"({"elements": ["0", "1"], "covers": [["0", "2"]]})")),
                    poset::PosetError);

    const auto bad = scratch("bad.json");
    std::ofstream(bad) << "{ not json";
    CHECK_THROWS_AS(read_poset_file(bad), SchemaError);
}

TEST_CASE("construction family") {
    const auto family = construction_family(4);
    CHECK(family.size() > 20);
    unsigned last_rank = 0;
    for (const NamedPoset& p : family) {
        CHECK(p.poset.rank() >= 1);
        CHECK(p.poset.rank() <= 4);
        CHECK(p.poset.rank() >= last_rank);
        last_rank = p.poset.rank();
        CHECK(poset::flag_f(evaluate(parse_expr(p.expr))) == poset::flag_f(p.poset));
    }
}

TEST_CASE("verify runner") {
    VerifyOptions small;
    small.max_rank = 3;
    small.max_degree = 5;
    for (const char* name : {"eq2", "eq3", "eq4", "eq5", "eq7", "eq8", "eq10", "eq13-direct", "divisibility",
                             "cartesian", "diamond", "macmahon", "reiner", "qt", "carlitz", "oracles", "polytopes"}) {
        const auto results = run_verify(name, small);
        REQUIRE(results.size() == 1);
        CHECK_MESSAGE(results[0].ok, name << " witness " << results[0].witness);
        CHECK(results[0].cases > 0);
    }
    const auto eq13 = run_verify("eq13", small);
    CHECK_FALSE(eq13[0].ok);
    CHECK(eq13[0].witness == "ab");
    CHECK(run_verify("all", small).size() == verify_families().size());
    CHECK(is_verify_family("all"));
    CHECK_FALSE(is_verify_family("eq99"));
    CHECK_THROWS_AS(run_verify("eq99", small), DomainError);
}
