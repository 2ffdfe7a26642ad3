#pragma once

#include "incompat/matrix.hpp"
#include "incompat/rank.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace incompat {

struct SearchOptions {
    RankOptions rank = unitary_rank_options();
    // Worker threads for candidate evaluation; results do not depend on it.
    unsigned threads = 1;
};

// Maximum of m - rank over the searched submatrices for one side and one t,
// plus the first (m ascending, then lexicographic) selector achieving it.
// The witness is absent when the value is 0.
struct SideDeficiency {
    int value = 0;
    std::optional<SubmatrixSelector> witness;
    DecisionStats stats;
};

// Row side: m x (m+t) submatrices (m rows), a deficiency means dependent rows.
SideDeficiency r_row(const TransitionMatrix& u, std::size_t t, const SearchOptions& opts = {});
// Column side: (m+t) x m submatrices (m columns), dependent columns.
SideDeficiency r_col(const TransitionMatrix& u, std::size_t t, const SearchOptions& opts = {});
// max(r_row, r_col).
int r_t(const TransitionMatrix& u, std::size_t t, const SearchOptions& opts = {});

struct DeficiencyProfile {
    std::size_t dim = 0;
    std::vector<int> r_values;
    std::vector<int> r_row_values;
    std::vector<int> r_col_values;
    int tau = -1;
    int chi = 2;
    std::vector<std::optional<SubmatrixSelector>> row_witnesses;
    std::vector<std::optional<SubmatrixSelector>> col_witnesses;
    DecisionStats stats;

    // A selector achieving r_values[t] with the kernel side that certifies it
    // (left for the row side, right for the column side). Row side wins ties.
    std::optional<std::pair<SubmatrixSelector, KernelSide>> witness(std::size_t t) const;
};

// All R_t for t = d-1 down to 0. Each t is bracketed by
// R_{t+1} <= R_t <= R_{t+1} + 1 (per side), which prunes the search without
// changing values or witnesses.
DeficiencyProfile deficiency_profile(const TransitionMatrix& u, const SearchOptions& opts = {});

// tau without the full profile: the largest t in [0, d-2] admitting any
// rank-deficient m x (m+t) or (m+t) x m submatrix, else -1.
int tau_fast(const TransitionMatrix& u, const SearchOptions& opts = {});

// Structural facts every profile of a unitary must satisfy.
struct ProfileChecks {
    bool sides_max = false;        // R_t = max(R_{t,row}, R_{t,col})
    bool nonnegative = false;      // R_t >= 0
    bool unit_steps = false;       // 0 <= R_t - R_{t+1} <= 1
    bool last_zero = false;        // R_{d-1} = 0
    bool zero_propagates = false;  // R_0 = 0 forces every R_t = 0
    bool tau_chi = false;          // tau, chi consistent with r_values
    bool tau_unit = false;         // tau >= 0: R_tau = R_{tau,row} = R_{tau,col} = 1

    bool structural() const { return nonnegative && unit_steps && last_zero && zero_propagates; }
    bool all() const { return sides_max && structural() && tau_chi && tau_unit; }
};

ProfileChecks check_profile(const DeficiencyProfile& p);

// Kernel witnesses at both stored tau selectors (left kernel for the row side,
// right kernel for the column side). Empty when tau is outside [0, d-2].
struct TauWitnessCheck {
    std::optional<KernelWitness> row;
    std::optional<KernelWitness> col;
    bool all_nonzero() const {
        return row && col && row->all_nonzero && col->all_nonzero;
    }
};

std::optional<TauWitnessCheck> check_tau_witnesses(const TransitionMatrix& u, const DeficiencyProfile& p,
                                                   double nonzero_threshold = default_nonzero_threshold,
                                                   const RankOptions& rank = unitary_rank_options());

// tau from an R_t sequence: (first t with R_t = 0) - 1.
int tau_from_r_values(const std::vector<int>& r_values);

inline int chi_from_tau(std::size_t d, int tau) { return static_cast<int>(d) - tau; }

}  // namespace incompat
