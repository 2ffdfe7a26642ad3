#include "incompat/rank.hpp"

#include "incompat/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace incompat {

bool RankResult::fragile(double limit) const {
    if (gap_ratio > limit) return true;
    if (rank > 0 && threshold > limit * smallest_kept_sv) return true;
    return largest_dropped_sv > limit * threshold;
}

void DecisionStats::record(const RankResult& r) {
    ++decisions;
    if (r.fragile()) ++fragile;
    worst_gap_ratio = std::max(worst_gap_ratio, r.gap_ratio);
}

void DecisionStats::merge(const DecisionStats& other) {
    decisions += other.decisions;
    fragile += other.fragile;
    worst_gap_ratio = std::max(worst_gap_ratio, other.worst_gap_ratio);
}

void extract_into(const Eigen::MatrixXcd& m, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols, Eigen::MatrixXcd& out) {
    out.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                m(static_cast<Eigen::Index>(rows[r]), static_cast<Eigen::Index>(cols[c]));
        }
    }
}

ComplexMatrix extract_submatrix(const ComplexMatrix& m, const SubmatrixSelector& sel) {
    sel.check_bounds(m.rows(), m.cols());
    Eigen::MatrixXcd out;
    extract_into(m.values(), sel.rows, sel.cols, out);
    return ComplexMatrix(std::move(out));
}

RankResult numerical_rank(const Eigen::MatrixXcd& m, const RankOptions& opts) {
    RankResult result;
    if (m.rows() == 0 || m.cols() == 0) {
        return result;
    }
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    const double scale = opts.scale.value_or(sigma_max);
    result.threshold = opts.tol * scale * static_cast<double>(std::max(m.rows(), m.cols()));

    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > result.threshold) {
            ++result.rank;
            result.smallest_kept_sv = sv(i);
        } else {
            result.largest_dropped_sv = std::max(result.largest_dropped_sv, sv(i));
        }
    }
    if (result.rank > 0 && result.rank < static_cast<std::size_t>(sv.size())) {
        result.gap_ratio = result.largest_dropped_sv / result.smallest_kept_sv;
    }
    return result;
}

namespace {

// Full-rank certificate from Businger-Golub pivoting: with A P = Q [R11 R12],
// sigma_min(A) >= sigma_min(R11) >= 3 |r_kk| / sqrt(4^k + 6k - 1).
std::optional<RankResult> certify_full_rank(const Eigen::MatrixXcd& a, const RankOptions& opts) {
    const Eigen::Index k = std::min(a.rows(), a.cols());
    if (k == 0 || k > 24) return std::nullopt;
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr =
        a.rows() <= a.cols() ? Eigen::ColPivHouseholderQR<Eigen::MatrixXcd>(a.adjoint())
                             : Eigen::ColPivHouseholderQR<Eigen::MatrixXcd>(a);
    const double fro = a.norm();
    const double kd = static_cast<double>(k);
    // Allowance for the rounding error in the computed r_kk.
    const double slack = 64.0 * kd * std::numeric_limits<double>::epsilon() * fro;
    const double r_kk = std::abs(qr.matrixQR()(k - 1, k - 1)) - slack;
    if (r_kk <= 0.0) return std::nullopt;
    const double lower = 3.0 * r_kk / std::sqrt(std::ldexp(1.0, 2 * static_cast<int>(k)) + 6.0 * kd - 1.0);

    RankResult r;
    r.rank = static_cast<std::size_t>(k);
    r.smallest_kept_sv = lower;
    // sigma_max <= Frobenius norm.
    r.threshold = opts.tol * opts.scale.value_or(fro) * static_cast<double>(std::max(a.rows(), a.cols()));
    if (r.fragile()) return std::nullopt;
    return r;
}

}  // namespace

RankResult screened_rank(const Eigen::MatrixXcd& m, const RankOptions& opts) {
    if (auto r = certify_full_rank(m, opts)) return *r;
    return numerical_rank(m, opts);
}

RankResult numerical_rank(const ComplexMatrix& m, const RankOptions& opts) {
    if (!(opts.tol >= 0.0) || (opts.scale && !(*opts.scale >= 0.0))) {
        throw Error(ErrorCode::invalid_argument, "rank tolerance and scale must be non-negative");
    }
    return numerical_rank(m.values(), opts);
}

const char* to_string(KernelSide side) noexcept {
    return side == KernelSide::left ? "left" : "right";
}

KernelWitness kernel_witness(const ComplexMatrix& m, KernelSide side, const SubmatrixSelector& sel,
                             const WitnessOptions& opts) {
    sel.check_bounds(m.rows(), m.cols());
    Eigen::MatrixXcd sub;
    extract_into(m.values(), sel.rows, sel.cols, sub);
    // Left kernel of M is the right kernel of M^T (plain transpose).
    const Eigen::MatrixXcd a = side == KernelSide::left ? Eigen::MatrixXcd(sub.transpose()) : sub;

    const RankResult rank = numerical_rank(a, opts.rank);
    if (rank.rank >= static_cast<std::size_t>(a.cols())) {
        throw Error(ErrorCode::no_kernel, std::string("selected submatrix has full rank on the ") +
                                              to_string(side) + " side");
    }

    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    Eigen::VectorXcd z = svd.matrixV().col(a.cols() - 1);

    Eigen::Index pivot = 0;
    for (Eigen::Index i = 1; i < z.size(); ++i) {
        if (std::abs(z(i)) > std::abs(z(pivot))) pivot = i;
    }
    const Complex phase = z(pivot) / std::abs(z(pivot));
    z *= std::conj(phase);
    z(pivot) = Complex(z(pivot).real(), 0.0);
    z.normalize();

    KernelWitness w;
    w.side = side;
    w.selector = sel;
    w.residual = (a * z).norm();
    w.all_nonzero = (z.cwiseAbs().array() > opts.nonzero_threshold).all();
    w.coefficients = std::move(z);
    return w;
}

KernelWitness kernel_witness(const TransitionMatrix& u, KernelSide side, const SubmatrixSelector& sel,
                             const WitnessOptions& opts) {
    return kernel_witness(u.matrix(), side, sel, opts);
}

}  // namespace incompat
