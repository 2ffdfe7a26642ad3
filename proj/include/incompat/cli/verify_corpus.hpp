#pragma once

#include "incompat/cli/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace incompat::cli {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

struct CorpusSummary {
    std::size_t max_dim = 0;
    std::size_t seeds = 0;
    std::size_t matrices = 0;
    std::vector<SuiteResult> suites;
    std::string note;
    DecisionStats rank_stats;
    double seconds = 0.0;
    bool all_pass() const;
};

// Runs every invariant suite over identity, dft, qubit, bronzan and `seeds`
// random unitaries per dimension up to max_dim. max_dim above the support
// cap is a too_large error.
CorpusSummary verify_corpus(std::size_t max_dim, std::size_t seeds, const AnalyzeOptions& opts);

ordered_json to_json(const CorpusSummary& s, bool timings);
void write_text(std::ostream& out, const CorpusSummary& s);

}  // namespace incompat::cli
