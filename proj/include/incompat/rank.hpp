#pragma once

#include "incompat/matrix.hpp"

#include <cstddef>
#include <optional>

namespace incompat {

inline constexpr double default_rank_tol = 1e-10;
inline constexpr double default_nonzero_threshold = 1e-8;
// A rank decision whose gap ratio (or threshold margin) exceeds this is
// reported as fragile.
inline constexpr double fragile_gap_limit = 1e-3;

struct RankOptions {
    double tol = default_rank_tol;
    // Magnitude the threshold is relative to. Unset means the largest singular
    // value of the queried matrix. Submatrices of a unitary should use 1 so a
    // block of rounding-level entries is not mistaken for a full-rank block.
    std::optional<double> scale;
};

inline RankOptions unitary_rank_options(double tol = default_rank_tol) {
    return RankOptions{tol, 1.0};
}

struct RankResult {
    std::size_t rank = 0;
    double smallest_kept_sv = 0.0;
    double largest_dropped_sv = 0.0;
    // largest_dropped_sv / smallest_kept_sv; 0 when nothing was dropped or
    // nothing was kept.
    double gap_ratio = 0.0;
    // Singular values above this are counted.
    double threshold = 0.0;

    // True when the decision depends on the tolerance: the spectral gap is
    // narrow, or a kept/dropped value sits within `limit` of the threshold.
    bool fragile(double limit = fragile_gap_limit) const;
};

// Running summary of rank decisions made during a search.
struct DecisionStats {
    std::size_t decisions = 0;
    std::size_t fragile = 0;
    double worst_gap_ratio = 0.0;

    void record(const RankResult& r);
    void merge(const DecisionStats& other);
};

ComplexMatrix extract_submatrix(const ComplexMatrix& m, const SubmatrixSelector& sel);

// Copies the selected entries into `out` (resized as needed). No validation.
void extract_into(const Eigen::MatrixXcd& m, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols, Eigen::MatrixXcd& out);

// rank = #{singular values > tol * scale * max(rows, cols)}.
RankResult numerical_rank(const ComplexMatrix& m, const RankOptions& opts = {});

// Unchecked variant for hot loops; an empty matrix has rank 0.
RankResult numerical_rank(const Eigen::MatrixXcd& m, const RankOptions& opts);

// Same rank and fragility verdict as numerical_rank. Blocks that a pivoted QR
// proves to have full rank well clear of the threshold skip the SVD; for those
// smallest_kept_sv is a lower bound and threshold an upper bound.
RankResult screened_rank(const Eigen::MatrixXcd& m, const RankOptions& opts);

enum class KernelSide { left, right };

const char* to_string(KernelSide side) noexcept;

struct WitnessOptions {
    RankOptions rank;
    double nonzero_threshold = default_nonzero_threshold;
};

// Unit vector z with z^T M_sel = 0 (left) or M_sel z = 0 (right).
struct KernelWitness {
    KernelSide side = KernelSide::left;
    ComplexVector coefficients;
    SubmatrixSelector selector;
    bool all_nonzero = false;
    double residual = 0.0;
};

// The singular vector of the smallest singular value, phase-normalized so
// its largest-modulus coefficient is real positive. Throws no_kernel when the
// selected submatrix has full rank on the requested side.
KernelWitness kernel_witness(const ComplexMatrix& m, KernelSide side, const SubmatrixSelector& sel,
                             const WitnessOptions& opts = {});

// Same, with the threshold scaled to the unit norm of a unitary by default.
KernelWitness kernel_witness(const TransitionMatrix& u, KernelSide side, const SubmatrixSelector& sel,
                             const WitnessOptions& opts = {unitary_rank_options(), default_nonzero_threshold});

}  // namespace incompat
