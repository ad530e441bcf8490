#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ghtk::accept {

/// Options for the seeded verification suites. trials = -1 keeps each
/// criterion's default count.
struct SuiteOptions {
    std::uint64_t seed = 1;
    int trials = -1;
    unsigned workers = 1;
};

struct CriterionResult {
    std::string id;
    std::string alias;
    bool pass = false;
    std::size_t trials = 0;
    std::string detail;
};

/// All criterion ids, in order ("a1" .. "a14").
std::vector<std::string> criterion_ids();

/// Runs a named suite: a criterion id, its alias (e.g. "thm4"), or "all".
/// Throws UnknownSuite for anything else.
std::vector<CriterionResult> run_suite(const std::string& name,
                                       const SuiteOptions& opts);

/// Deterministic JSON report (byte-identical for identical seed + argv).
std::string report_to_json(const std::vector<CriterionResult>& results,
                           const SuiteOptions& opts);

std::string report_to_text(const std::vector<CriterionResult>& results);

}  // namespace ghtk::accept
