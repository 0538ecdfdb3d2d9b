#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "ualg/checks.hpp"

namespace ualg {

/// Parse "0,2|1,3" block notation into a congruence-shaped partition.
Congruence parse_block_notation(const std::string& text, int n);
std::string block_notation(const Congruence& c);

/// One configured verification job, expanded from a suite config entry.
struct SuiteOptions {
    int jobs = 1;
};

/// Runs every configured check on every selected (alpha, beta) pair.
/// Config: a JSON array of entries
///   {"algebra": path, "terms": {"p": ..., "q": ..., "q2": ...},
///    "checks": [names], "congruences": [[alphaBlocks, betaBlocks], ...]}
/// where term values are either file paths or inline term JSON, and the
/// optional congruence filter uses block notation strings.
/// Paths resolve relative to `base_dir`.  Reports come back sorted by
/// (algebra, check, alpha, beta).
std::vector<CheckReport> run_suite(const nlohmann::json& config, const std::string& base_dir,
                                   const SuiteOptions& opts = {});

}  // namespace ualg
