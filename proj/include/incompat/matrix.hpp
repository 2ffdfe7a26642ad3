#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace incompat {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;

// Dense complex matrix with at least one row and one column and finite
// entries. Immutable once constructed.
class ComplexMatrix {
public:
    explicit ComplexMatrix(Eigen::MatrixXcd values);

    static ComplexMatrix from_parts(const Eigen::MatrixXd& re, const Eigen::MatrixXd& im);

    std::size_t rows() const noexcept { return static_cast<std::size_t>(values_.rows()); }
    std::size_t cols() const noexcept { return static_cast<std::size_t>(values_.cols()); }
    Complex operator()(std::size_t row, std::size_t col) const;

    const Eigen::MatrixXcd& values() const noexcept { return values_; }

    ComplexMatrix transpose() const { return ComplexMatrix(values_.transpose()); }
    ComplexMatrix conjugate() const { return ComplexMatrix(values_.conjugate()); }

    // Bitwise entry comparison.
    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    Eigen::MatrixXcd values_;
};

// max_{jk} |(U^dagger U - I)_{jk}|; the matrix must be square.
double unitarity_residual(const ComplexMatrix& m);

// Unitary matrix of overlaps U_jk = <a_j|b_k> between two orthonormal bases.
class TransitionMatrix {
public:
    static constexpr double default_tolerance_per_dim = 1e-12;

    // Uses default_tolerance_per_dim * d.
    explicit TransitionMatrix(ComplexMatrix matrix);
    TransitionMatrix(ComplexMatrix matrix, double unitarity_tolerance);

    std::size_t dim() const noexcept { return matrix_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    const Eigen::MatrixXcd& values() const noexcept { return matrix_.values(); }
    Complex operator()(std::size_t row, std::size_t col) const { return matrix_(row, col); }

    double unitarity_tolerance() const noexcept { return tolerance_; }
    double unitarity_residual() const noexcept { return residual_; }

    TransitionMatrix transpose() const { return TransitionMatrix(matrix_.transpose(), tolerance_); }
    TransitionMatrix conjugate() const { return TransitionMatrix(matrix_.conjugate(), tolerance_); }

private:
    ComplexMatrix matrix_;
    double tolerance_;
    double residual_;
};

// Row and column index lists picking out a submatrix. Both lists are
// nonempty and strictly increasing; bounds are checked against the matrix the
// selector is applied to.
struct SubmatrixSelector {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;

    SubmatrixSelector() = default;
    SubmatrixSelector(std::vector<std::size_t> row_indices, std::vector<std::size_t> col_indices);

    // Throws bounds error when an index is outside [0, n_rows) x [0, n_cols).
    void check_bounds(std::size_t n_rows, std::size_t n_cols) const;

    // Same indices with rows and columns exchanged.
    SubmatrixSelector transposed() const { return SubmatrixSelector(cols, rows); }

    friend bool operator==(const SubmatrixSelector&, const SubmatrixSelector&) = default;
};

// Example families ---------------------------------------------------------

TransitionMatrix identity(std::size_t d);

// [[e^{i phi1} sin(theta), -e^{-i phi2} cos(theta)],
//  [e^{i phi2} cos(theta),  e^{-i phi1} sin(theta)]]
TransitionMatrix qubit_rotation(double theta, double phi1, double phi2);

// Real 3x3 rotation with a structural zero at (row 2, col 1).
TransitionMatrix bronzan_rotation(double theta1, double theta2);

// F_jk = exp(2 pi i jk / d) / sqrt(d), j, k in [0, d-1].
TransitionMatrix dft_matrix(std::size_t d);

// Haar-distributed unitary from the QR factorization of a complex Gaussian
// matrix, deterministic for a given seed.
TransitionMatrix random_unitary(std::size_t d, std::uint64_t seed);

}  // namespace incompat
