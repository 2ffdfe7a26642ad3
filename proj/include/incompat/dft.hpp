#pragma once

#include "incompat/matrix.hpp"
#include "incompat/rank.hpp"

#include <cstddef>
#include <vector>

namespace incompat {

// Positive divisors of d, ascending (trial division up to sqrt(d)).
std::vector<std::size_t> divisors(std::size_t d);

struct DivisorDecomposition {
    std::size_t d = 0;
    std::vector<std::size_t> divisors;
    std::size_t d_prime = 0;   // largest divisor <= sqrt(d)
    std::size_t d_dprime = 0;  // d / d_prime
};

DivisorDecomposition divisor_decomposition(std::size_t d);

// Incompatibility order of the d-point DFT: d' + d/d'.
int dft_chi(std::size_t d);

struct ZetaPoint {
    double x = 0.0;
    std::size_t d1 = 0;  // greatest divisor <= x
    std::size_t d2 = 0;  // least divisor >= x
    double value = 0.0;

    // 1 - d / (d1 d2): the slope of zeta on [d1, d2].
    double slope(std::size_t d) const {
        return 1.0 - static_cast<double>(d) / (static_cast<double>(d1) * static_cast<double>(d2));
    }
};

// zeta_d(x) = d/d1 + d/d2 + (1 - d/(d1 d2)) x for x in [1, d].
ZetaPoint zeta(const DivisorDecomposition& dec, double x);
ZetaPoint zeta(std::size_t d, double x);

// Integer lower bound on |supp f^| given |supp f| = supp_f:
// ceil(d (d1 + d2 - supp_f) / (d1 d2)) with d1 <= supp_f <= d2 the bracketing
// divisors (d1 = d2 = supp_f when supp_f divides d).
std::size_t meshulam_bound(std::size_t d, std::size_t supp_f);

// Unit-norm indicator of {0, d/d1, 2 d/d1, ...} (d1 points); its DFT is
// supported on d/d1 points.
ComplexVector extremal_comb(std::size_t d, std::size_t d1);

// Rows {j0 + j' d2 : j' < d1} and columns {k0 + k' d1 : k' < d2}, d2 = d/d1.
SubmatrixSelector comb_selector(std::size_t d, std::size_t d1, std::size_t j0, std::size_t k0);

// Whether the comb_selector block of dft_matrix(d) has numerical rank 1.
bool comb_submatrix_rank1_check(std::size_t d, std::size_t d1, std::size_t j0, std::size_t k0,
                                const RankOptions& opts = unitary_rank_options());

}  // namespace incompat
