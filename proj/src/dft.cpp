#include "incompat/dft.hpp"

#include "incompat/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace incompat {

namespace {

void require_positive(std::size_t d, const char* who) {
    if (d == 0) {
        throw Error(ErrorCode::invalid_dimension, std::string(who) + ": d must be positive");
    }
}

void require_divisor(std::size_t d, std::size_t d1, const char* who) {
    if (d1 == 0 || d % d1 != 0) {
        throw Error(ErrorCode::domain, std::string(who) + ": " + std::to_string(d1) +
                                           " does not divide " + std::to_string(d));
    }
}

}  // namespace

std::vector<std::size_t> divisors(std::size_t d) {
    require_positive(d, "divisors");
    std::vector<std::size_t> low;
    std::vector<std::size_t> high;
    for (std::size_t q = 1; q * q <= d; ++q) {
        if (d % q == 0) {
            low.push_back(q);
            if (q * q != d) high.push_back(d / q);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

DivisorDecomposition divisor_decomposition(std::size_t d) {
    DivisorDecomposition dec;
    dec.d = d;
    dec.divisors = divisors(d);
    for (std::size_t q : dec.divisors) {
        if (q * q <= d) dec.d_prime = q;
    }
    dec.d_dprime = d / dec.d_prime;
    return dec;
}

int dft_chi(std::size_t d) {
    const DivisorDecomposition dec = divisor_decomposition(d);
    return static_cast<int>(dec.d_prime + dec.d_dprime);
}

ZetaPoint zeta(const DivisorDecomposition& dec, double x) {
    const auto d = static_cast<double>(dec.d);
    if (!(x >= 1.0 && x <= d)) {
        throw Error(ErrorCode::domain, "zeta: x = " + std::to_string(x) + " outside [1, " +
                                           std::to_string(dec.d) + "]");
    }
    const auto& divs = dec.divisors;
    const auto hi = std::lower_bound(divs.begin(), divs.end(), x,
                                     [](std::size_t q, double v) { return static_cast<double>(q) < v; });
    ZetaPoint p;
    p.x = x;
    p.d2 = *hi;
    p.d1 = static_cast<double>(*hi) == x ? *hi : *std::prev(hi);
    const auto d1 = static_cast<double>(p.d1);
    const auto d2 = static_cast<double>(p.d2);
    p.value = d / d1 + d / d2 + (1.0 - d / (d1 * d2)) * x;
    return p;
}

ZetaPoint zeta(std::size_t d, double x) {
    return zeta(divisor_decomposition(d), x);
}

std::size_t meshulam_bound(std::size_t d, std::size_t supp_f) {
    require_positive(d, "meshulam_bound");
    if (supp_f < 1 || supp_f > d) {
        throw Error(ErrorCode::domain, "meshulam_bound: support size " + std::to_string(supp_f) +
                                           " outside [1, " + std::to_string(d) + "]");
    }
    const std::vector<std::size_t> divs = divisors(d);
    const auto hi = std::lower_bound(divs.begin(), divs.end(), supp_f);
    const std::size_t d2 = *hi;
    const std::size_t d1 = d2 == supp_f ? d2 : *std::prev(hi);
    const std::size_t num = d * (d1 + d2 - supp_f);
    const std::size_t den = d1 * d2;
    return (num + den - 1) / den;
}

ComplexVector extremal_comb(std::size_t d, std::size_t d1) {
    require_positive(d, "extremal_comb");
    require_divisor(d, d1, "extremal_comb");
    const std::size_t step = d / d1;
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d));
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(d1));
    for (std::size_t j = 0; j < d1; ++j) {
        v(static_cast<Eigen::Index>(j * step)) = amplitude;
    }
    return v;
}

SubmatrixSelector comb_selector(std::size_t d, std::size_t d1, std::size_t j0, std::size_t k0) {
    require_positive(d, "comb_selector");
    require_divisor(d, d1, "comb_selector");
    const std::size_t d2 = d / d1;
    if (j0 >= d2 || k0 >= d1) {
        throw Error(ErrorCode::domain, "comb_selector: offsets need j0 < " + std::to_string(d2) +
                                           " and k0 < " + std::to_string(d1));
    }
    std::vector<std::size_t> rows(d1);
    std::vector<std::size_t> cols(d2);
    for (std::size_t j = 0; j < d1; ++j) rows[j] = j0 + j * d2;
    for (std::size_t k = 0; k < d2; ++k) cols[k] = k0 + k * d1;
    return SubmatrixSelector(std::move(rows), std::move(cols));
}

bool comb_submatrix_rank1_check(std::size_t d, std::size_t d1, std::size_t j0, std::size_t k0,
                                const RankOptions& opts) {
    const SubmatrixSelector sel = comb_selector(d, d1, j0, k0);
    return numerical_rank(extract_submatrix(dft_matrix(d).matrix(), sel), opts).rank == 1;
}

}  // namespace incompat
