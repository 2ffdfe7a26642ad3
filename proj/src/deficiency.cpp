#include "incompat/deficiency.hpp"

#include "incompat/combinations.hpp"
#include "incompat/detail/ordered_scan.hpp"
#include "incompat/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace incompat {

namespace {

enum class Side { row, col };

void check_t(const TransitionMatrix& u, std::size_t t) {
    if (t >= u.dim()) {
        throw Error(ErrorCode::domain, "t = " + std::to_string(t) + " outside [0, " +
                                           std::to_string(u.dim() - 1) + "]");
    }
}

// Row-side search on `m` (U itself, or U^T for the column side). Only
// candidates that could reach a value in [lower, upper] are evaluated.
SideDeficiency scan_rows(const Eigen::MatrixXcd& m, std::size_t t, int lower, int upper,
                         const SearchOptions& opts) {
    const std::size_t d = static_cast<std::size_t>(m.rows());
    SideDeficiency result;

    for (std::size_t rows = 1; rows + t <= d; ++rows) {
        const std::size_t cols = rows + t;
        // m - rank <= m always, and for a unitary the m rows restricted to the
        // remaining d - m - t columns must restore full row rank.
        const int cap = static_cast<int>(std::min(rows, d - rows - t));
        if (cap <= result.value || cap < lower) continue;
        const int bound = std::min(upper, cap);

        auto visit = [&](std::uint64_t outer, int visit_bound, DecisionStats& stats)
            -> std::optional<detail::ScanHit> {
            const std::vector<std::size_t> row_set = unrank_combination(d, rows, outer);
            std::vector<std::size_t> col_set(cols);
            for (std::size_t i = 0; i < cols; ++i) col_set[i] = i;
            Eigen::MatrixXcd sub;
            std::optional<detail::ScanHit> best;
            std::uint64_t inner = 0;
            do {
                extract_into(m, row_set, col_set, sub);
                const RankResult rk = screened_rank(sub, opts.rank);
                stats.record(rk);
                const int value = static_cast<int>(rows) - static_cast<int>(rk.rank);
                if (value > 0 && (!best || value > best->value)) {
                    best = detail::ScanHit{value, outer, inner};
                    if (value >= visit_bound) break;
                }
                ++inner;
            } while (next_combination(col_set, d));
            return best;
        };

        const detail::ScanOutcome outcome =
            detail::ordered_scan(binomial(d, rows), bound, opts.threads, visit);
        result.stats.merge(outcome.stats);
        if (outcome.best && outcome.best->value > result.value) {
            result.value = outcome.best->value;
            result.witness = SubmatrixSelector(unrank_combination(d, rows, outcome.best->outer),
                                               unrank_combination(d, cols, outcome.best->inner));
        }
        if (result.value >= upper) break;
    }
    return result;
}

SideDeficiency scan_side(const TransitionMatrix& u, Side side, std::size_t t, int lower, int upper,
                         const SearchOptions& opts) {
    if (side == Side::row) {
        return scan_rows(u.values(), t, lower, upper, opts);
    }
    const Eigen::MatrixXcd ut = u.values().transpose();
    SideDeficiency r = scan_rows(ut, t, lower, upper, opts);
    if (r.witness) r.witness = r.witness->transposed();
    return r;
}

constexpr int unbounded = std::numeric_limits<int>::max();

}  // namespace

SideDeficiency r_row(const TransitionMatrix& u, std::size_t t, const SearchOptions& opts) {
    check_t(u, t);
    return scan_side(u, Side::row, t, 0, unbounded, opts);
}

SideDeficiency r_col(const TransitionMatrix& u, std::size_t t, const SearchOptions& opts) {
    check_t(u, t);
    return scan_side(u, Side::col, t, 0, unbounded, opts);
}

int r_t(const TransitionMatrix& u, std::size_t t, const SearchOptions& opts) {
    return std::max(r_row(u, t, opts).value, r_col(u, t, opts).value);
}

std::optional<std::pair<SubmatrixSelector, KernelSide>> DeficiencyProfile::witness(std::size_t t) const {
    if (t >= dim || r_values[t] == 0) return std::nullopt;
    if (r_row_values[t] >= r_col_values[t] && row_witnesses[t]) {
        return std::pair{*row_witnesses[t], KernelSide::left};
    }
    if (col_witnesses[t]) return std::pair{*col_witnesses[t], KernelSide::right};
    return std::nullopt;
}

int tau_from_r_values(const std::vector<int>& r_values) {
    for (std::size_t t = 0; t < r_values.size(); ++t) {
        if (r_values[t] == 0) return static_cast<int>(t) - 1;
    }
    // Not reachable for unitary input (R_{d-1} = 0); treat as maximal deficiency.
    return static_cast<int>(r_values.size()) - 1;
}

DeficiencyProfile deficiency_profile(const TransitionMatrix& u, const SearchOptions& opts) {
    const std::size_t d = u.dim();
    DeficiencyProfile p;
    p.dim = d;
    p.r_values.assign(d, 0);
    p.r_row_values.assign(d, 0);
    p.r_col_values.assign(d, 0);
    p.row_witnesses.assign(d, std::nullopt);
    p.col_witnesses.assign(d, std::nullopt);

    for (std::size_t t = d; t-- > 0;) {
        const bool last = t + 1 == d;
        const int row_lower = last ? 0 : p.r_row_values[t + 1];
        const int col_lower = last ? 0 : p.r_col_values[t + 1];
        const int row_upper = last ? unbounded : row_lower + 1;
        const int col_upper = last ? unbounded : col_lower + 1;

        SideDeficiency row = scan_side(u, Side::row, t, row_lower, row_upper, opts);
        SideDeficiency col = scan_side(u, Side::col, t, col_lower, col_upper, opts);
        p.stats.merge(row.stats);
        p.stats.merge(col.stats);
        p.r_row_values[t] = row.value;
        p.r_col_values[t] = col.value;
        p.r_values[t] = std::max(row.value, col.value);
        p.row_witnesses[t] = std::move(row.witness);
        p.col_witnesses[t] = std::move(col.witness);
    }

    p.tau = tau_from_r_values(p.r_values);
    p.chi = chi_from_tau(d, p.tau);
    return p;
}

ProfileChecks check_profile(const DeficiencyProfile& p) {
    ProfileChecks c;
    const std::size_t d = p.dim;
    const auto& r = p.r_values;
    if (d == 0 || r.size() != d || p.r_row_values.size() != d || p.r_col_values.size() != d) return c;

    c.sides_max = c.nonnegative = c.unit_steps = c.zero_propagates = true;
    for (std::size_t t = 0; t < d; ++t) {
        c.sides_max = c.sides_max && r[t] == std::max(p.r_row_values[t], p.r_col_values[t]);
        c.nonnegative = c.nonnegative && r[t] >= 0;
        if (t + 1 < d) c.unit_steps = c.unit_steps && r[t] - r[t + 1] >= 0 && r[t] - r[t + 1] <= 1;
        if (r[0] == 0) c.zero_propagates = c.zero_propagates && r[t] == 0;
    }
    c.last_zero = r[d - 1] == 0;
    c.tau_chi = p.tau == tau_from_r_values(r) && p.chi == chi_from_tau(d, p.tau);
    c.tau_unit = p.tau < 0 || (static_cast<std::size_t>(p.tau) < d && r[p.tau] == 1 &&
                               p.r_row_values[p.tau] == 1 && p.r_col_values[p.tau] == 1);
    return c;
}

std::optional<TauWitnessCheck> check_tau_witnesses(const TransitionMatrix& u, const DeficiencyProfile& p,
                                                   double nonzero_threshold, const RankOptions& rank) {
    if (p.tau < 0 || static_cast<std::size_t>(p.tau) + 2 > u.dim()) return std::nullopt;
    const WitnessOptions opts{rank, nonzero_threshold};
    TauWitnessCheck check;
    if (const auto& sel = p.row_witnesses[p.tau]) check.row = kernel_witness(u, KernelSide::left, *sel, opts);
    if (const auto& sel = p.col_witnesses[p.tau]) check.col = kernel_witness(u, KernelSide::right, *sel, opts);
    return check;
}

int tau_fast(const TransitionMatrix& u, const SearchOptions& opts) {
    const std::size_t d = u.dim();
    if (d < 2) return -1;
    // R_t is nonincreasing, so tau + 1 is the first t with R_t = 0. Each level
    // below that stops at its first deficient block.
    for (std::size_t t = 0; t + 1 < d; ++t) {
        if (scan_side(u, Side::row, t, 1, 1, opts).value > 0) continue;
        // Square blocks of U^T are transposes of square blocks of U.
        if (t > 0 && scan_side(u, Side::col, t, 1, 1, opts).value > 0) continue;
        return static_cast<int>(t) - 1;
    }
    return static_cast<int>(d) - 2;
}

}  // namespace incompat
