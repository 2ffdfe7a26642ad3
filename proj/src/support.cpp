#include "incompat/support.hpp"

#include "incompat/combinations.hpp"
#include "incompat/detail/ordered_scan.hpp"
#include "incompat/error.hpp"

#include <algorithm>
#include <string>

namespace incompat {

SupportCounts support_counts(const ComplexVector& psi_in_a, const TransitionMatrix& u,
                             double zero_threshold) {
    if (static_cast<std::size_t>(psi_in_a.size()) != u.dim()) {
        throw Error(ErrorCode::invalid_argument, "state has length " + std::to_string(psi_in_a.size()) +
                                                     ", expected " + std::to_string(u.dim()));
    }
    if (!(psi_in_a.norm() > zero_threshold)) {
        throw Error(ErrorCode::invalid_state, "state vector is zero");
    }
    const ComplexVector in_b = u.values().adjoint() * psi_in_a;
    SupportCounts c;
    c.n_a = static_cast<std::size_t>((psi_in_a.cwiseAbs().array() > zero_threshold).count());
    c.n_b = static_cast<std::size_t>((in_b.cwiseAbs().array() > zero_threshold).count());
    c.n_ab = c.n_a + c.n_b;
    return c;
}

namespace {

// First (S_A, S_B) pair with the given sizes whose spans intersect.
detail::ScanOutcome scan_pairs(const Eigen::MatrixXcd& u, std::size_t na, std::size_t nb,
                               const SupportOptions& opts) {
    const std::size_t d = static_cast<std::size_t>(u.rows());
    auto visit = [&](std::uint64_t outer, int, DecisionStats& stats) -> std::optional<detail::ScanHit> {
        const std::vector<std::size_t> outside = complement(unrank_combination(d, na, outer), d);
        if (outside.empty()) {
            // S_A is the whole basis: every S_B lies in its span.
            return detail::ScanHit{1, outer, 0};
        }
        std::vector<std::size_t> subset_b(nb);
        for (std::size_t i = 0; i < nb; ++i) subset_b[i] = i;
        Eigen::MatrixXcd sub;
        std::uint64_t inner = 0;
        do {
            extract_into(u, outside, subset_b, sub);
            const RankResult rk = screened_rank(sub, opts.rank);
            stats.record(rk);
            if (rk.rank < nb) return detail::ScanHit{1, outer, inner};
            ++inner;
        } while (next_combination(subset_b, d));
        return std::nullopt;
    };
    return detail::ordered_scan(binomial(d, na), 1, opts.threads, visit);
}

}  // namespace

SupportWitness min_support_uncertainty(const TransitionMatrix& u, const SupportOptions& opts) {
    const std::size_t d = u.dim();
    if (d > opts.max_dim) {
        throw Error(ErrorCode::too_large, "support search limited to d <= " + std::to_string(opts.max_dim) +
                                              ", got d = " + std::to_string(d));
    }

    DecisionStats stats;
    for (std::size_t s = 2; s <= d + 1; ++s) {
        const std::size_t nb_lo = s > d ? s - d : 1;
        const std::size_t nb_hi = std::min(d, s - 1);
        for (std::size_t nb = nb_lo; nb <= nb_hi; ++nb) {
            const std::size_t na = s - nb;
            const detail::ScanOutcome outcome = scan_pairs(u.values(), na, nb, opts);
            stats.merge(outcome.stats);
            if (!outcome.best) continue;

            SupportWitness w;
            w.subset_a = unrank_combination(d, na, outcome.best->outer);
            w.subset_b = unrank_combination(d, nb, outcome.best->inner);
            const std::vector<std::size_t> outside = complement(w.subset_a, d);

            ComplexVector y;
            if (outside.empty()) {
                y = ComplexVector::Constant(static_cast<Eigen::Index>(nb), 1.0 / std::sqrt(double(nb)));
            } else {
                WitnessOptions wopts;
                wopts.rank = opts.rank;
                wopts.nonzero_threshold = opts.zero_threshold;
                y = kernel_witness(u, KernelSide::right, SubmatrixSelector(outside, w.subset_b), wopts)
                        .coefficients;
            }
            // psi = sum_k y_k |b_k>, and |b_k> has A-coordinates U(:, k).
            ComplexVector x = ComplexVector::Zero(static_cast<Eigen::Index>(d));
            for (std::size_t i = 0; i < nb; ++i) {
                x += y(static_cast<Eigen::Index>(i)) * u.values().col(static_cast<Eigen::Index>(w.subset_b[i]));
            }
            x.normalize();
            const SupportCounts counts = support_counts(x, u, opts.zero_threshold);
            w.state_in_a = std::move(x);
            w.n_a = counts.n_a;
            w.n_b = counts.n_b;
            w.n_ab = counts.n_ab;
            w.stats = stats;
            return w;
        }
    }
    // s = d + 1 with S_A = A always intersects.
    throw Error(ErrorCode::value, "support search found no intersecting subset pair");
}

Theorem2Check verify_theorem2(const TransitionMatrix& u, const SupportOptions& opts) {
    Theorem2Check check;
    check.witness = min_support_uncertainty(u, opts);
    check.profile = deficiency_profile(u, SearchOptions{opts.rank, opts.threads});
    check.chi = check.profile.chi;
    check.n_min = check.witness.subset_a.size() + check.witness.subset_b.size();
    check.pass = check.chi == static_cast<int>(check.n_min);
    return check;
}

}  // namespace incompat
