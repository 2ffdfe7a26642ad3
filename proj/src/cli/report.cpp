#include "incompat/cli/report.hpp"

#include "incompat/dft.hpp"
#include "incompat/error.hpp"
#include "incompat/matrix_io.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ostream>
#include <sstream>

namespace incompat::cli {

namespace {

using clock = std::chrono::steady_clock;

double seconds_since(clock::time_point start) {
    return std::chrono::duration<double>(clock::now() - start).count();
}

std::size_t require_dim(const MatrixSpec& spec) {
    if (!spec.dim) {
        throw Error(ErrorCode::invalid_argument, "family '" + spec.family + "' needs --dim");
    }
    return *spec.dim;
}

ordered_json matrix_json(const TransitionMatrix& u) {
    std::ostringstream os;
    save_matrix(os, u.matrix(), MatrixFormat::json);
    return ordered_json::parse(os.str());
}

ordered_json selector_json(const SubmatrixSelector& sel) {
    return ordered_json{{"rows", sel.rows}, {"cols", sel.cols}};
}

ordered_json vector_json(const ComplexVector& v) {
    ordered_json re = ordered_json::array();
    ordered_json im = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        re.push_back(v(i).real());
        im.push_back(v(i).imag());
    }
    return ordered_json{{"re", re}, {"im", im}};
}

ordered_json witness_json(const KernelWitness& w) {
    ordered_json j = selector_json(w.selector);
    j["side"] = to_string(w.side);
    j["all_nonzero"] = w.all_nonzero;
    j["residual"] = w.residual;
    j["coefficients"] = vector_json(w.coefficients);
    return j;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

template <class T>
std::string join_values(const std::vector<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

LoadedMatrix load(const MatrixSpec& spec) {
    if (!spec.input.empty() && !spec.family.empty()) {
        throw Error(ErrorCode::invalid_argument, "use either --input or --family, not both");
    }
    if (!spec.input.empty()) {
        const MatrixFormat fmt = parse_matrix_format(spec.format);
        TransitionMatrix u(load_matrix_file(spec.input, fmt));
        return {std::move(u), ordered_json{{"source", "file"}, {"path", spec.input}, {"format", spec.format}}};
    }
    if (spec.family.empty()) {
        throw Error(ErrorCode::invalid_argument, "no matrix given (use --input or --family)");
    }

    ordered_json desc{{"source", "family"}, {"family", spec.family}};
    const std::string& f = spec.family;
    if (f == "identity" || f == "dft" || f == "random") {
        const std::size_t d = require_dim(spec);
        desc["dim"] = d;
        if (f == "identity") return {identity(d), desc};
        if (f == "dft") return {dft_matrix(d), desc};
        desc["seed"] = spec.seed;
        return {random_unitary(d, spec.seed), desc};
    }
    if (f == "qubit") {
        desc["theta"] = spec.theta;
        desc["phi1"] = spec.phi1;
        desc["phi2"] = spec.phi2;
        return {qubit_rotation(spec.theta, spec.phi1, spec.phi2), desc};
    }
    if (f == "bronzan") {
        desc["theta1"] = spec.theta1;
        desc["theta2"] = spec.theta2;
        return {bronzan_rotation(spec.theta1, spec.theta2), desc};
    }
    throw Error(ErrorCode::invalid_argument,
                "unknown family '" + f + "' (expected identity, dft, qubit, bronzan or random)");
}

std::optional<bool> AnalysisReport::support_matches_chi() const {
    if (!support) return std::nullopt;
    return static_cast<int>(support->subset_a.size() + support->subset_b.size()) == profile.chi;
}

bool AnalysisReport::checks_pass() const {
    if (!profile_checks.all()) return false;
    if (auto m = support_matches_chi(); m && !*m) return false;
    return !support || support->consistent();
}

AnalysisReport analyze(const LoadedMatrix& input, const AnalyzeOptions& opts) {
    AnalysisReport r(input.descriptor, input.matrix, opts);
    const RankOptions rank = unitary_rank_options(opts.rank_tol);

    auto start = clock::now();
    r.profile = deficiency_profile(r.matrix, SearchOptions{rank, opts.threads});
    r.profile_checks = check_profile(r.profile);
    r.tau_witnesses = check_tau_witnesses(r.matrix, r.profile, opts.zero_threshold, rank);
    r.deficiency_seconds = seconds_since(start);
    r.rank_stats.merge(r.profile.stats);

    if (opts.skip_support) {
        r.support_note = "support search skipped on request";
    } else if (r.matrix.dim() > opts.support_cap) {
        r.cap_exceeded = true;
        r.support_note = "support search skipped: d = " + std::to_string(r.matrix.dim()) +
                         " exceeds the cap of " + std::to_string(opts.support_cap) +
                         " (raise it with --support-cap)";
    } else {
        SupportOptions sopts;
        sopts.rank = rank;
        sopts.zero_threshold = opts.zero_threshold;
        sopts.max_dim = opts.support_cap;
        sopts.threads = opts.threads;
        start = clock::now();
        r.support = min_support_uncertainty(r.matrix, sopts);
        r.support_seconds = seconds_since(start);
        r.rank_stats.merge(r.support->stats);
    }
    return r;
}

ordered_json to_json(const AnalysisReport& r, bool timings) {
    ordered_json j;
    j["input"] = r.input;
    j["dimension"] = r.matrix.dim();
    j["matrix"] = matrix_json(r.matrix);
    j["tolerances"] = {{"rank_tol", r.options.rank_tol},
                       {"rank_scale", 1.0},
                       {"zero_threshold", r.options.zero_threshold},
                       {"support_cap", r.options.support_cap}};

    const DeficiencyProfile& p = r.profile;
    ordered_json witnesses = ordered_json::array();
    for (std::size_t t = 0; t < p.dim; ++t) {
        if (auto w = p.witness(t)) {
            ordered_json e{{"t", t}, {"side", to_string(w->second)}};
            e.update(selector_json(w->first));
            witnesses.push_back(e);
        }
    }
    j["deficiency"] = {{"r_values", p.r_values}, {"r_row_values", p.r_row_values},
                       {"r_col_values", p.r_col_values}, {"tau", p.tau},
                       {"chi", p.chi}, {"witnesses", witnesses}};
    if (r.tau_witnesses) {
        ordered_json tw;
        tw["row"] = r.tau_witnesses->row ? witness_json(*r.tau_witnesses->row) : ordered_json();
        tw["col"] = r.tau_witnesses->col ? witness_json(*r.tau_witnesses->col) : ordered_json();
        j["deficiency"]["tau_witnesses"] = tw;
    }

    if (r.support) {
        const SupportWitness& w = *r.support;
        j["support"] = {{"n_a", w.n_a}, {"n_b", w.n_b}, {"n_ab", w.n_ab},
                        {"subset_a", w.subset_a}, {"subset_b", w.subset_b},
                        {"state", vector_json(w.state_in_a)}};
    } else {
        j["support"] = nullptr;
        j["support_note"] = r.support_note;
    }

    const ProfileChecks& c = r.profile_checks;
    ordered_json checks{{"r_is_max_of_sides", c.sides_max},
                        {"r_nonnegative", c.nonnegative},
                        {"r_unit_steps", c.unit_steps},
                        {"r_last_zero", c.last_zero},
                        {"r_zero_propagates", c.zero_propagates},
                        {"tau_chi_consistent", c.tau_chi},
                        {"tau_sides_unit", c.tau_unit}};
    checks["tau_witnesses_nonzero"] =
        r.tau_witnesses ? ordered_json(r.tau_witnesses->all_nonzero()) : ordered_json();
    const auto m = r.support_matches_chi();
    checks["support_equals_chi"] = m ? ordered_json(*m) : ordered_json();
    checks["support_witness_consistent"] = r.support ? ordered_json(r.support->consistent()) : ordered_json();
    checks["all_pass"] = r.checks_pass();
    j["checks"] = checks;

    j["rank_stats"] = {{"decisions", r.rank_stats.decisions},
                       {"fragile", r.rank_stats.fragile},
                       {"worst_gap_ratio", r.rank_stats.worst_gap_ratio}};
    if (timings) {
        j["timings"] = {{"deficiency_seconds", r.deficiency_seconds},
                        {"support_seconds", r.support_seconds}};
    }
    return j;
}

void write_text(std::ostream& out, const AnalysisReport& r, bool timings) {
    const DeficiencyProfile& p = r.profile;
    out << "input: " << r.input.dump() << "\n";
    out << "dimension: " << r.matrix.dim() << "\n";
    out << "tolerances: rank " << format_double(r.options.rank_tol) << " (unit scale), zero "
        << format_double(r.options.zero_threshold) << "\n\n";

    out << "R_t     : " << join_values(p.r_values) << "\n";
    out << "R_t,row : " << join_values(p.r_row_values) << "\n";
    out << "R_t,col : " << join_values(p.r_col_values) << "\n";
    out << "tau = " << p.tau << ", chi = " << p.chi << "\n";
    for (std::size_t t = 0; t < p.dim; ++t) {
        if (auto w = p.witness(t)) {
            out << "  t = " << t << ": rows " << join(w->first.rows) << " cols " << join(w->first.cols)
                << " (" << to_string(w->second) << " kernel)\n";
        }
    }

    out << "\n";
    if (r.support) {
        const SupportWitness& w = *r.support;
        out << "minimal support: n_ab = " << w.n_ab << " (n_a = " << w.n_a << ", n_b = " << w.n_b
            << "), S_A = " << join(w.subset_a) << ", S_B = " << join(w.subset_b) << "\n";
    } else {
        out << r.support_note << "\n";
    }

    const ProfileChecks& c = r.profile_checks;
    out << "\nchecks:\n";
    out << "  R_t = max of sides        " << verdict(c.sides_max) << "\n";
    out << "  R_t >= 0                  " << verdict(c.nonnegative) << "\n";
    out << "  unit steps in R_t         " << verdict(c.unit_steps) << "\n";
    out << "  R_{d-1} = 0               " << verdict(c.last_zero) << "\n";
    out << "  R_0 = 0 propagates        " << verdict(c.zero_propagates) << "\n";
    out << "  tau, chi consistent       " << verdict(c.tau_chi) << "\n";
    out << "  R_tau sides equal 1       " << verdict(c.tau_unit) << "\n";
    if (r.tau_witnesses) {
        out << "  tau witnesses nonzero     " << (r.tau_witnesses->all_nonzero() ? "yes" : "no") << "\n";
    }
    if (auto m = r.support_matches_chi()) {
        out << "  support minimum = chi     " << verdict(*m) << "\n";
        out << "  support witness counts    " << verdict(r.support->consistent()) << "\n";
    }
    out << "\nrank decisions: " << r.rank_stats.decisions << ", fragile: " << r.rank_stats.fragile
        << ", worst gap ratio: " << format_double(r.rank_stats.worst_gap_ratio) << "\n";
    if (timings) {
        out << "time: deficiency " << format_double(r.deficiency_seconds) << " s, support "
            << format_double(r.support_seconds) << " s\n";
    }
}

void write_profile_csv(std::ostream& out, const DeficiencyProfile& p) {
    out << "t,R_t,R_row_t,R_col_t\n";
    for (std::size_t t = 0; t < p.dim; ++t) {
        out << t << "," << p.r_values[t] << "," << p.r_row_values[t] << "," << p.r_col_values[t] << "\n";
    }
}

std::vector<double> zeta_grid(std::size_t d, std::size_t samples) {
    if (d < 2) throw Error(ErrorCode::invalid_argument, "zeta curve needs d >= 2");
    if (samples < 2) throw Error(ErrorCode::invalid_argument, "zeta curve needs at least 2 samples");
    std::vector<double> xs;
    xs.reserve(samples + 16);
    const double span = static_cast<double>(d) - 1.0;
    for (std::size_t i = 0; i < samples; ++i) {
        xs.push_back(1.0 + span * static_cast<double>(i) / static_cast<double>(samples - 1));
    }
    for (std::size_t q : divisors(d)) xs.push_back(static_cast<double>(q));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

void write_zeta_csv(std::ostream& out, std::size_t d, std::size_t samples) {
    const DivisorDecomposition dec = divisor_decomposition(d);
    out << "x,zeta,d1,d2\n";
    for (double x : zeta_grid(d, samples)) {
        const ZetaPoint z = zeta(dec, x);
        out << format_double(z.x) << "," << format_double(z.value) << "," << z.d1 << "," << z.d2 << "\n";
    }
}

}  // namespace incompat::cli
