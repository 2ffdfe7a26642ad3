#include "incompat/cli/app.hpp"

#include "incompat/cli/report.hpp"
#include "incompat/cli/verify_corpus.hpp"
#include "incompat/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>

namespace incompat::cli {

namespace {

struct OutputOptions {
    std::string path;
    bool json = false;
    bool timings = false;
};

void add_matrix_options(CLI::App* cmd, MatrixSpec& spec) {
    cmd->add_option("--input", spec.input, "Matrix file");
    cmd->add_option("--format", spec.format, "Matrix file format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--family", spec.family, "Named matrix family")
        ->check(CLI::IsMember({"identity", "dft", "qubit", "bronzan", "random"}));
    cmd->add_option("--dim", spec.dim, "Dimension (identity, dft, random)")->check(CLI::PositiveNumber);
    cmd->add_option("--theta", spec.theta, "Rotation angle (qubit)");
    cmd->add_option("--phi1", spec.phi1, "First phase (qubit)");
    cmd->add_option("--phi2", spec.phi2, "Second phase (qubit)");
    cmd->add_option("--theta1", spec.theta1, "First angle (bronzan)");
    cmd->add_option("--theta2", spec.theta2, "Second angle (bronzan)");
    cmd->add_option("--seed", spec.seed, "Seed (random)");
}

void add_search_options(CLI::App* cmd, AnalyzeOptions& opts) {
    cmd->add_option("--rank-tol", opts.rank_tol, "Relative rank tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--zero-threshold", opts.zero_threshold, "Coefficients at or below this count as zero")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", opts.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App* cmd, OutputOptions& out, bool formats) {
    cmd->add_option("--output", out.path, "Write the result to this file instead of stdout");
    if (formats) {
        cmd->add_flag("--json", out.json, "Emit a single JSON document");
        cmd->add_flag("--timings", out.timings, "Include wall-clock timings");
    }
}

// Runs `write` against the --output file or `fallback`.
void emit(const OutputOptions& o, std::ostream& fallback, const std::function<void(std::ostream&)>& write) {
    if (o.path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream file(o.path, std::ios::binary);
    if (!file) throw Error(ErrorCode::invalid_argument, "cannot open '" + o.path + "' for writing");
    write(file);
    if (!file) throw Error(ErrorCode::invalid_argument, "failed writing '" + o.path + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Incompatibility order of two orthonormal bases from their transition matrix"};
    app.name("incompat");
    app.require_subcommand(1);

    MatrixSpec spec;
    AnalyzeOptions opts;
    OutputOptions output;
    bool verify = false;
    std::size_t zeta_dim = 0;
    std::size_t samples = 1000;
    std::size_t max_dim = 5;
    std::size_t seeds = 20;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Deficiency profile, tau, chi and minimal support");
    add_matrix_options(analyze_cmd, spec);
    add_search_options(analyze_cmd, opts);
    add_output_options(analyze_cmd, output, true);
    analyze_cmd->add_flag("--verify", verify, "Exit with status 1 when a cross-check fails");
    analyze_cmd->add_option("--support-cap", opts.support_cap, "Largest d for the support search")
        ->capture_default_str();
    analyze_cmd->add_flag("--skip-support", opts.skip_support, "Run the deficiency route only");

    CLI::App* profile_cmd = app.add_subcommand("profile-curve", "CSV of R_t and its two sides");
    add_matrix_options(profile_cmd, spec);
    add_search_options(profile_cmd, opts);
    add_output_options(profile_cmd, output, false);

    CLI::App* zeta_cmd = app.add_subcommand("zeta-curve", "CSV of the piecewise linear bound zeta_d");
    zeta_cmd->add_option("--dim", zeta_dim, "d (at least 2)")->required();
    zeta_cmd->add_option("--samples", samples, "Evenly spaced samples on [1, d]")->capture_default_str();
    add_output_options(zeta_cmd, output, false);

    CLI::App* corpus_cmd = app.add_subcommand("verify-corpus", "Run the invariant suites over a test corpus");
    corpus_cmd->add_option("--max-dim", max_dim, "Largest dimension")->capture_default_str();
    corpus_cmd->add_option("--seeds", seeds, "Random unitaries per dimension")->capture_default_str();
    corpus_cmd->add_option("--support-cap", opts.support_cap, "Largest d for the support search")
        ->capture_default_str();
    add_search_options(corpus_cmd, opts);
    add_output_options(corpus_cmd, output, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (analyze_cmd->parsed()) {
            const AnalysisReport report = analyze(load(spec), opts);
            emit(output, out, [&](std::ostream& os) {
                if (output.json) os << to_json(report, output.timings).dump(2) << "\n";
                else write_text(os, report, output.timings);
            });
            if (report.cap_exceeded) err << "warning: " << report.support_note << "\n";
            if (verify && !report.checks_pass()) return exit_verification_failed;
            return report.cap_exceeded ? exit_cap_exceeded : exit_ok;
        }
        if (profile_cmd->parsed()) {
            const LoadedMatrix m = load(spec);
            const DeficiencyProfile p =
                deficiency_profile(m.matrix, SearchOptions{unitary_rank_options(opts.rank_tol), opts.threads});
            emit(output, out, [&](std::ostream& os) { write_profile_csv(os, p); });
            return exit_ok;
        }
        if (zeta_cmd->parsed()) {
            zeta_grid(zeta_dim, samples);  // validates before any output is written
            emit(output, out, [&](std::ostream& os) { write_zeta_csv(os, zeta_dim, samples); });
            return exit_ok;
        }
        if (corpus_cmd->parsed()) {
            const CorpusSummary s = verify_corpus(max_dim, seeds, opts);
            emit(output, out, [&](std::ostream& os) {
                if (output.json) os << to_json(s, output.timings).dump(2) << "\n";
                else write_text(os, s);
            });
            return s.all_pass() ? exit_ok : exit_verification_failed;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::too_large ? exit_cap_exceeded : exit_input_error;
    }
    return exit_input_error;
}

}  // namespace incompat::cli
