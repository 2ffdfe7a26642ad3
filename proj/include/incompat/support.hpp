#pragma once

#include "incompat/deficiency.hpp"
#include "incompat/matrix.hpp"
#include "incompat/rank.hpp"

#include <cstddef>
#include <vector>

namespace incompat {

inline constexpr std::size_t default_support_max_dim = 10;

struct SupportCounts {
    std::size_t n_a = 0;
    std::size_t n_b = 0;
    std::size_t n_ab = 0;

    friend bool operator==(const SupportCounts&, const SupportCounts&) = default;
};

// Counts nonzero coordinates of a state given by its A-coordinates x_j. The
// B-coordinates are U^dagger x.
SupportCounts support_counts(const ComplexVector& psi_in_a, const TransitionMatrix& u,
                             double zero_threshold = default_nonzero_threshold);

struct SupportOptions {
    RankOptions rank = unitary_rank_options();
    double zero_threshold = default_nonzero_threshold;
    // Subset pairs grow like 4^d; larger inputs are rejected with too_large.
    std::size_t max_dim = default_support_max_dim;
    unsigned threads = 1;
};

struct SupportWitness {
    // Unit-norm A-coordinates of a state in span(S_A) and span(S_B).
    ComplexVector state_in_a;
    // Counted from the reconstructed state.
    std::size_t n_a = 0;
    std::size_t n_b = 0;
    std::size_t n_ab = 0;
    // The subset pair found by the search.
    std::vector<std::size_t> subset_a;
    std::vector<std::size_t> subset_b;
    DecisionStats stats;

    // Counted supports match the searched subsets.
    bool consistent() const {
        return n_a == subset_a.size() && n_b == subset_b.size() && n_ab == n_a + n_b;
    }
};

// Smallest |S_A| + |S_B| whose spans intersect nontrivially, searched with
// s = |S_A| + |S_B| ascending, then |S_B| ascending, then S_A and S_B
// lexicographically. span(S_A) and span(S_B) meet iff the rows outside S_A,
// restricted to the columns S_B, have dependent columns.
SupportWitness min_support_uncertainty(const TransitionMatrix& u, const SupportOptions& opts = {});

struct Theorem2Check {
    DeficiencyProfile profile;
    SupportWitness witness;
    int chi = 0;          // d - tau from the deficiency route
    std::size_t n_min = 0;  // from the subset search
    bool pass = false;
};

// Runs both routes and compares chi with the minimal support uncertainty.
Theorem2Check verify_theorem2(const TransitionMatrix& u, const SupportOptions& opts = {});

}  // namespace incompat
