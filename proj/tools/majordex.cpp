// majordex: command-line front end.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/parse/domain error,
// 3 I/O, schema or poset-file error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "majordex/abindex.hpp"
#include "majordex/cli/expr.hpp"
#include "majordex/cli/poset_io.hpp"
#include "majordex/cli/verify.hpp"
#include "majordex/permstat.hpp"
#include "majordex/poset.hpp"
#include "majordex/qarith.hpp"

namespace {

using nlohmann::json;
using namespace majordex;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

std::string str(const Integer& x) { return x.str(); }

json coeffs(const qarith::QPoly& p) {
    json out = json::object();
    for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = str(c);
    return out;
}

json coeffs(const qarith::QTPoly& p) {
    json out = json::object();
    for (const auto& [e, c] : p.terms()) out[std::to_string(e.first) + "," + std::to_string(e.second)] = str(c);
    return out;
}

template <class Poly>
json word_coeffs(const Poly& p) {
    json out = json::object();
    for (const auto& [w, c] : p) out[to_string(w)] = str(c);
    return out;
}

std::string subset_text(abindex::SubsetMask s) {
    std::string out = "{";
    const auto xs = abindex::subset_elements(s);
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "}";
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw DomainError(std::string(flag) + ": not an integer list: " + text);
        out.push_back(v);
    }
    if (out.empty()) throw DomainError(std::string(flag) + ": empty list");
    return out;
}

struct Output {
    bool json_mode = false;
    json doc = json::object();
    std::string text;
};

int exit_code_for(const Error& e) {
    const std::string& code = e.code();
    if (code == "E_IO" || code == "E_SCHEMA" || code == "E_POSET") return kIo;
    return kUsage;
}

poset::GradedPoset load(const std::string& expr) { return cli::evaluate(cli::parse_expr(expr)); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Major MacMahon map, ab/cd-indices and related identities"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "Emit structured JSON output");

    std::string expr;
    const auto expr_command = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("expr", expr, "Poset expression, e.g. \"bipyr(T(2))\" or @file.json")->required();
        return sub;
    };

    CLI::App* abindex_cmd = expr_command("abindex", "Print the ab-index");
    CLI::App* cdindex_cmd = expr_command("cdindex", "Print the cd-index, if it exists");
    CLI::App* theta_cmd = expr_command("theta", "Print Theta of the ab-index");
    CLI::App* thetaqt_cmd = expr_command("thetaqt", "Print the q,t-version of Theta of the ab-index");
    CLI::App* hpoly_cmd = expr_command("hpoly", "Print the h-polynomial of a simplicial poset");
    CLI::App* flagf_cmd = expr_command("flagf", "Print the flag f-vector");
    CLI::App* export_cmd = expr_command("export", "Write the poset as JSON");

    std::string alpha_text, r_text;
    unsigned n = 0, t_order = 0;
    CLI::App* majdist_cmd = app.add_subcommand("majdist", "Major index distribution over a multiset");
    majdist_cmd->fallthrough();
    majdist_cmd->add_option("--alpha", alpha_text, "Multiplicities, e.g. 1,2,2")->required();
    CLI::App* signedmaj_cmd = app.add_subcommand("signedmaj", "Major index distribution of r-signed permutations");
    signedmaj_cmd->fallthrough();
    signedmaj_cmd->add_option("--r", r_text, "Sign counts, e.g. 2,2,3")->required();
    CLI::App* qeulerian_cmd = app.add_subcommand("qeulerian", "Joint distribution of maj and des over S_n");
    qeulerian_cmd->fallthrough();
    qeulerian_cmd->add_option("--n", n, "Permutation length")->required()->check(CLI::Range(1, 20));
    CLI::App* carlitz_cmd = app.add_subcommand("carlitz", "Check the Carlitz identity as a series in t");
    carlitz_cmd->fallthrough();
    carlitz_cmd->add_option("--n", n, "Permutation length")->required()->check(CLI::Range(1, 20));
    carlitz_cmd->add_option("--torder", t_order, "Truncation order in t")->required()->check(CLI::Range(0, 64));

    std::string family;
    cli::VerifyOptions verify_options;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run a named identity family");
    verify_cmd->fallthrough();
    verify_cmd->add_option("family", family, "Family name, or all")->required();
    verify_cmd->add_option("--max-rank", verify_options.max_rank, "Rank bound")->check(CLI::Range(1, 8));
    verify_cmd->add_option("--max-degree", verify_options.max_degree, "ab-word degree bound")
        ->check(CLI::Range(0, 16));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    Output out;
    out.json_mode = json_mode;
    int status = kOk;
    try {
        if (abindex_cmd->parsed()) {
            const auto psi = poset::ab_index(load(expr));
            out.text = to_string(psi);
            out.doc["abindex"] = word_coeffs(psi);
        } else if (cdindex_cmd->parsed()) {
            const auto cd = abindex::to_cd(poset::ab_index(load(expr)));
            out.text = cd ? to_string(*cd) : "not cd-expressible";
            out.doc["cdindex"] = cd ? word_coeffs(*cd) : json(nullptr);
        } else if (theta_cmd->parsed()) {
            const auto t = abindex::theta(poset::ab_index(load(expr)));
            out.text = to_string(t);
            out.doc["theta"] = coeffs(t);
        } else if (thetaqt_cmd->parsed()) {
            const auto t = abindex::theta_qt(poset::ab_index(load(expr)));
            out.text = to_string(t);
            out.doc["thetaqt"] = coeffs(t);
        } else if (hpoly_cmd->parsed()) {
            const auto h = poset::h_polynomial(load(expr));
            out.text = to_string(h);
            out.doc["hpoly"] = coeffs(h);
        } else if (flagf_cmd->parsed()) {
            const auto f = poset::flag_f(load(expr));
            json map = json::object();
            for (const auto& [s, count] : f) {
                out.text += subset_text(s) + " " + str(count) + "\n";
                std::string key = subset_text(s);
                map[key.substr(1, key.size() - 2)] = str(count);
            }
            if (!out.text.empty()) out.text.pop_back();
            out.doc["flagf"] = map;
        } else if (export_cmd->parsed()) {
            const auto loaded = cli::evaluate_with_labels(cli::parse_expr(expr));
            const json doc = cli::poset_to_json(loaded.poset, loaded.labels ? &*loaded.labels : nullptr);
            out.text = doc.dump(2);
            out.doc["poset"] = doc;
        } else if (majdist_cmd->parsed()) {
            const auto p = permstat::maj_distribution(parse_int_list(alpha_text, "--alpha"));
            out.text = to_string(p);
            out.doc["majdist"] = coeffs(p);
        } else if (signedmaj_cmd->parsed()) {
            const auto p = permstat::signed_maj_distribution(parse_int_list(r_text, "--r"));
            out.text = to_string(p);
            out.doc["signedmaj"] = coeffs(p);
        } else if (qeulerian_cmd->parsed()) {
            const auto p = permstat::q_eulerian(n);
            out.text = to_string(p);
            out.doc["qeulerian"] = coeffs(p);
        } else if (carlitz_cmd->parsed()) {
            const auto r = permstat::carlitz_check(n, t_order);
            out.text = r.ok ? "ok" : "FAIL at t^" + std::to_string(*r.first_failing_order);
            out.doc["carlitz"] = {{"ok", r.ok}};
            if (!r.ok) {
                out.doc["carlitz"]["first_failing_order"] = *r.first_failing_order;
                status = kVerifyFailed;
            }
        } else if (verify_cmd->parsed()) {
            if (!cli::is_verify_family(family)) throw DomainError("unknown verify family \"" + family + "\"");
            json results = json::array();
            for (const cli::VerifyResult& r : cli::run_verify(family, verify_options)) {
                std::string line = std::string(r.ok ? "PASS " : "FAIL ") + r.name + " (" +
                                   std::to_string(r.cases) + " cases)";
                if (!r.ok) line += " witness: " + r.witness;
                if (!r.detail.empty()) line += " [" + r.detail + "]";
                out.text += line + "\n";
                json entry = {{"name", r.name}, {"ok", r.ok}, {"cases", r.cases}};
                if (!r.ok) entry["witness"] = r.witness;
                if (!r.detail.empty()) entry["detail"] = r.detail;
                results.push_back(entry);
                if (!r.ok) status = kVerifyFailed;
            }
            out.text.pop_back();
            out.doc["verify"] = results;
        }
    } catch (const cli::ParseError& e) {
        status = kUsage;
        out.doc = {{"error", {{"code", e.code()}, {"message", e.what()}, {"position", e.position()},
                              {"line", e.line()}, {"column", e.column()}}}};
        out.text.clear();
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
    } catch (const Error& e) {
        status = exit_code_for(e);
        out.doc = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
        out.text.clear();
        std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
    }

    if (json_mode) {
        std::cout << out.doc.dump(2) << "\n";
    } else if (!out.text.empty()) {
        std::cout << out.text << "\n";
    }
    return status;
}
