#pragma once

#include <string>
#include <utility>
#include <vector>

#include "majordex/poset.hpp"

// Named invariant families checked exhaustively over bounded inputs.
namespace majordex::cli {

struct VerifyOptions {
    unsigned max_rank = 5;
    unsigned max_degree = 8;  // ab-word degree for the operator identities
};

struct VerifyResult {
    std::string name;
    bool ok = true;
    std::size_t cases = 0;
    std::string witness;  // first failing input, empty on success
    std::string detail;
};

// Family names in the order `all` runs them.
const std::vector<std::string>& verify_families();
bool is_verify_family(const std::string& name);

// Stops at the first failure of a family. `all` runs every family and
// reports one result each. Throws DomainError for an unknown name.
std::vector<VerifyResult> run_verify(const std::string& name, const VerifyOptions& options);

struct NamedPoset {
    std::string expr;  // parseable expression that builds `poset`
    poset::GradedPoset poset;
};

// Standard constructions, pyramids, bipyramids and small products of rank
// 1..max_rank, ordered by rank and then by expression.
std::vector<NamedPoset> construction_family(unsigned max_rank);

} // namespace majordex::cli
