#pragma once

#include "incompat/deficiency.hpp"
#include "incompat/matrix.hpp"
#include "incompat/support.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace incompat::cli {

using ordered_json = nlohmann::ordered_json;

// Where the matrix comes from: a file, or a named family with parameters.
struct MatrixSpec {
    std::string input;
    std::string format = "json";
    std::string family;
    std::optional<std::size_t> dim;
    double theta = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double phi1 = 0.0;
    double phi2 = 0.0;
    std::uint64_t seed = 0;
};

struct LoadedMatrix {
    TransitionMatrix matrix;
    ordered_json descriptor;
};

// Throws Error(invalid_argument) for an unknown family or missing parameters.
LoadedMatrix load(const MatrixSpec& spec);

struct AnalyzeOptions {
    double rank_tol = default_rank_tol;
    double zero_threshold = default_nonzero_threshold;
    std::size_t support_cap = default_support_max_dim;
    bool skip_support = false;
    unsigned threads = 1;
};

struct AnalysisReport {
    AnalysisReport(ordered_json in, TransitionMatrix u, AnalyzeOptions opts)
        : input(std::move(in)), matrix(std::move(u)), options(opts) {}

    ordered_json input;
    TransitionMatrix matrix;
    AnalyzeOptions options;

    DeficiencyProfile profile;
    ProfileChecks profile_checks;
    std::optional<TauWitnessCheck> tau_witnesses;

    std::optional<SupportWitness> support;
    // Why the support route did not run.
    std::string support_note;
    bool cap_exceeded = false;

    DecisionStats rank_stats;
    double deficiency_seconds = 0.0;
    double support_seconds = 0.0;

    // Support minimum equals chi; only meaningful when the support route ran.
    std::optional<bool> support_matches_chi() const;
    // Every verdict that was computed holds.
    bool checks_pass() const;
};

AnalysisReport analyze(const LoadedMatrix& input, const AnalyzeOptions& opts);

ordered_json to_json(const AnalysisReport& report, bool timings);
void write_text(std::ostream& out, const AnalysisReport& report, bool timings);

// One row per t: t,R_t,R_row_t,R_col_t.
void write_profile_csv(std::ostream& out, const DeficiencyProfile& profile);

// Evenly spaced samples on [1, d] merged with every divisor of d.
std::vector<double> zeta_grid(std::size_t d, std::size_t samples);
void write_zeta_csv(std::ostream& out, std::size_t d, std::size_t samples);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace incompat::cli
