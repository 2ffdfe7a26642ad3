#include "incompat/cli/verify_corpus.hpp"

#include "incompat/dft.hpp"
#include "incompat/error.hpp"

#include <chrono>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace incompat::cli {

namespace {

constexpr double pi = std::numbers::pi;

struct Entry {
    std::string name;
    TransitionMatrix u;
    bool structured;
};

std::string angle_name(double a) { return format_double(a); }

std::vector<Entry> corpus(std::size_t max_dim, std::size_t seeds) {
    std::vector<Entry> out;
    for (std::size_t d = 1; d <= max_dim; ++d) {
        out.push_back({"identity(" + std::to_string(d) + ")", identity(d), true});
        out.push_back({"dft(" + std::to_string(d) + ")", dft_matrix(d), true});
    }
    const double angles[] = {0.0, pi / 6, pi / 4, 1.0, pi / 2};
    if (max_dim >= 2) {
        for (double th : angles) {
            out.push_back({"qubit(" + angle_name(th) + ")", qubit_rotation(th, 0.3, -1.1), true});
        }
    }
    if (max_dim >= 3) {
        for (double a : angles)
            for (double b : angles)
                out.push_back({"bronzan(" + angle_name(a) + "," + angle_name(b) + ")",
                               bronzan_rotation(a, b), true});
    }
    for (std::size_t d = 2; d <= max_dim; ++d) {
        for (std::size_t k = 0; k < seeds; ++k) {
            const std::uint64_t seed = 1000 * d + k;
            out.push_back({"random(" + std::to_string(d) + ", seed " + std::to_string(seed) + ")",
                           random_unitary(d, seed), false});
        }
    }
    return out;
}

SuiteResult suite(std::string name) {
    SuiteResult s;
    s.name = std::move(name);
    return s;
}

void expect(SuiteResult& suite, bool ok, const std::string& what) {
    ++suite.cases;
    if (!ok) suite.failures.push_back(what);
}

}  // namespace

bool CorpusSummary::all_pass() const {
    for (const auto& s : suites)
        if (!s.passed()) return false;
    return true;
}

CorpusSummary verify_corpus(std::size_t max_dim, std::size_t seeds, const AnalyzeOptions& opts) {
    if (max_dim == 0) throw Error(ErrorCode::invalid_argument, "max_dim must be at least 1");
    if (max_dim > opts.support_cap) {
        throw Error(ErrorCode::too_large, "max_dim = " + std::to_string(max_dim) +
                                              " exceeds the support search cap of " +
                                              std::to_string(opts.support_cap));
    }
    const auto start = std::chrono::steady_clock::now();
    CorpusSummary s;
    s.max_dim = max_dim;
    s.seeds = seeds;

    SuiteResult profile = suite("profile structure");
    SuiteResult shortcut = suite("tau shortcut");
    SuiteResult support = suite("support equals chi");
    SuiteResult closed = suite("dft closed form");
    SuiteResult witnesses = suite("tau witnesses");
    SuiteResult combs = suite("comb sharpness");

    if (max_dim == 1) {
        s.note = "max_dim = 1: a single basis vector admits no incompatibility; every suite is vacuous";
    } else {
        const RankOptions rank = unitary_rank_options(opts.rank_tol);
        const SearchOptions search{rank, opts.threads};
        SupportOptions sopts;
        sopts.rank = rank;
        sopts.zero_threshold = opts.zero_threshold;
        sopts.max_dim = opts.support_cap;
        sopts.threads = opts.threads;

        for (const Entry& e : corpus(max_dim, seeds)) {
            ++s.matrices;
            const std::size_t d = e.u.dim();
            const DeficiencyProfile p = deficiency_profile(e.u, search);
            s.rank_stats.merge(p.stats);
            expect(profile, check_profile(p).all(), e.name);
            expect(shortcut, tau_fast(e.u, search) == p.tau, e.name);

            const SupportWitness w = min_support_uncertainty(e.u, sopts);
            s.rank_stats.merge(w.stats);
            const int n_min = static_cast<int>(w.subset_a.size() + w.subset_b.size());
            expect(support, w.consistent() && n_min == p.chi, e.name);

            if (e.name.rfind("dft(", 0) == 0) {
                expect(closed, p.chi == dft_chi(d) && n_min == dft_chi(d), e.name);
            }
            if (e.structured) {
                if (auto tw = check_tau_witnesses(e.u, p, opts.zero_threshold, rank)) {
                    expect(witnesses, check_profile(p).tau_unit && tw->all_nonzero(), e.name);
                }
            }
        }

        for (std::size_t d = 2; d <= max_dim; ++d) {
            const TransitionMatrix f = dft_matrix(d);
            const DivisorDecomposition dec = divisor_decomposition(d);
            for (std::size_t d1 : dec.divisors) {
                const std::string tag = "comb(" + std::to_string(d) + "," + std::to_string(d1) + ")";
                const SupportCounts c = support_counts(extremal_comb(d, d1), f, opts.zero_threshold);
                expect(combs, c.n_a == d1 && c.n_b == d / d1 && c.n_a * c.n_b == d, tag);
                if (d1 == dec.d_prime) expect(combs, static_cast<int>(c.n_ab) == dft_chi(d), tag + " extremal");
                for (std::size_t j0 = 0; j0 < d / d1; ++j0)
                    for (std::size_t k0 = 0; k0 < d1; ++k0)
                        expect(combs, comb_submatrix_rank1_check(d, d1, j0, k0, rank),
                               tag + " block " + std::to_string(j0) + "," + std::to_string(k0));
            }
        }
    }

    s.suites = {profile, shortcut, support, closed, witnesses, combs};
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

ordered_json to_json(const CorpusSummary& s, bool timings) {
    ordered_json suites = ordered_json::array();
    for (const auto& r : s.suites) {
        suites.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"pass", r.passed()}});
    }
    ordered_json j{{"max_dim", s.max_dim}, {"seeds", s.seeds}, {"matrices", s.matrices}, {"suites", suites}};
    if (!s.note.empty()) j["note"] = s.note;
    j["rank_stats"] = {{"decisions", s.rank_stats.decisions},
                       {"fragile", s.rank_stats.fragile},
                       {"worst_gap_ratio", s.rank_stats.worst_gap_ratio}};
    j["all_pass"] = s.all_pass();
    if (timings) j["seconds"] = s.seconds;
    return j;
}

void write_text(std::ostream& out, const CorpusSummary& s) {
    out << "corpus: max_dim " << s.max_dim << ", " << s.seeds << " random seeds per dimension, "
        << s.matrices << " matrices\n";
    if (!s.note.empty()) out << "note: " << s.note << "\n";
    out << "\n";
    char line[128];
    std::snprintf(line, sizeof line, "%-22s %8s %8s  %s\n", "suite", "cases", "failed", "result");
    out << line;
    for (const auto& r : s.suites) {
        std::snprintf(line, sizeof line, "%-22s %8zu %8zu  %s\n", r.name.c_str(), r.cases, r.failures.size(),
                      r.passed() ? (r.cases == 0 ? "pass (vacuous)" : "pass") : "FAIL");
        out << line;
        for (const auto& f : r.failures) out << "    failed: " << f << "\n";
    }
    out << "\nrank decisions: " << s.rank_stats.decisions << ", fragile: " << s.rank_stats.fragile
        << ", worst gap ratio: " << format_double(s.rank_stats.worst_gap_ratio) << "\n";
    out << "runtime: " << format_double(s.seconds) << " s\n";
    out << (s.all_pass() ? "all suites pass\n" : "some suites FAILED\n");
}

}  // namespace incompat::cli
