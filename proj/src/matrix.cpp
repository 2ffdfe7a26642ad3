#include "incompat/matrix.hpp"

#include "incompat/error.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace incompat {

namespace {

void require_dimension(std::size_t d, const char* who) {
    if (d == 0) {
        throw Error(ErrorCode::invalid_dimension, std::string(who) + ": dimension must be positive");
    }
}

void require_finite(std::initializer_list<double> params, const char* who) {
    for (double p : params) {
        if (!std::isfinite(p)) {
            throw Error(ErrorCode::invalid_argument, std::string(who) + ": parameters must be finite");
        }
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd values) : values_(std::move(values)) {
    if (values_.rows() == 0 || values_.cols() == 0) {
        throw Error(ErrorCode::shape, "matrix must have at least one row and one column");
    }
    for (Eigen::Index c = 0; c < values_.cols(); ++c) {
        for (Eigen::Index r = 0; r < values_.rows(); ++r) {
            const Complex z = values_(r, c);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw Error(ErrorCode::value, "non-finite entry at (" + std::to_string(r) + ", " +
                                                  std::to_string(c) + ")");
            }
        }
    }
}

ComplexMatrix ComplexMatrix::from_parts(const Eigen::MatrixXd& re, const Eigen::MatrixXd& im) {
    if (re.rows() != im.rows() || re.cols() != im.cols()) {
        throw Error(ErrorCode::shape, "real and imaginary parts differ in shape");
    }
    Eigen::MatrixXcd values(re.rows(), re.cols());
    values.real() = re;
    values.imag() = im;
    return ComplexMatrix(std::move(values));
}

Complex ComplexMatrix::operator()(std::size_t row, std::size_t col) const {
    if (row >= rows() || col >= cols()) {
        throw Error(ErrorCode::bounds, "entry (" + std::to_string(row) + ", " + std::to_string(col) +
                                           ") outside " + std::to_string(rows()) + "x" +
                                           std::to_string(cols()) + " matrix");
    }
    return values_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    const auto& x = a.values_;
    const auto& y = b.values_;
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        for (Eigen::Index r = 0; r < x.rows(); ++r) {
            if (x(r, c).real() != y(r, c).real() || x(r, c).imag() != y(r, c).imag()) {
                return false;
            }
        }
    }
    return true;
}

double unitarity_residual(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::shape, "unitarity check needs a square matrix");
    }
    const auto& u = m.values();
    const Eigen::MatrixXcd gram = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return gram.cwiseAbs().maxCoeff();
}

TransitionMatrix::TransitionMatrix(ComplexMatrix matrix)
    : TransitionMatrix(matrix, default_tolerance_per_dim * static_cast<double>(matrix.rows())) {}

TransitionMatrix::TransitionMatrix(ComplexMatrix matrix, double unitarity_tolerance)
    : matrix_(std::move(matrix)), tolerance_(unitarity_tolerance), residual_(0.0) {
    if (!(unitarity_tolerance >= 0.0)) {
        throw Error(ErrorCode::invalid_argument, "unitarity tolerance must be non-negative");
    }
    residual_ = incompat::unitarity_residual(matrix_);
    if (residual_ > tolerance_) {
        throw Error(ErrorCode::not_unitary, "matrix is not unitary: max |U^dagger U - I| = " +
                                                std::to_string(residual_) + " exceeds tolerance " +
                                                std::to_string(tolerance_));
    }
}

SubmatrixSelector::SubmatrixSelector(std::vector<std::size_t> row_indices,
                                     std::vector<std::size_t> col_indices)
    : rows(std::move(row_indices)), cols(std::move(col_indices)) {
    if (rows.empty() || cols.empty()) {
        throw Error(ErrorCode::invalid_argument, "selector needs at least one row and one column");
    }
    auto increasing = [](const std::vector<std::size_t>& v) {
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i] <= v[i - 1]) return false;
        }
        return true;
    };
    if (!increasing(rows) || !increasing(cols)) {
        throw Error(ErrorCode::invalid_argument, "selector indices must be strictly increasing");
    }
}

void SubmatrixSelector::check_bounds(std::size_t n_rows, std::size_t n_cols) const {
    if (rows.empty() || cols.empty()) {
        throw Error(ErrorCode::invalid_argument, "empty selector");
    }
    if (rows.back() >= n_rows || cols.back() >= n_cols) {
        throw Error(ErrorCode::bounds, "selector index outside " + std::to_string(n_rows) + "x" +
                                           std::to_string(n_cols) + " matrix");
    }
}

TransitionMatrix identity(std::size_t d) {
    require_dimension(d, "identity");
    const auto n = static_cast<Eigen::Index>(d);
    return TransitionMatrix(ComplexMatrix(Eigen::MatrixXcd::Identity(n, n)), 0.0);
}

TransitionMatrix qubit_rotation(double theta, double phi1, double phi2) {
    require_finite({theta, phi1, phi2}, "qubit_rotation");
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const Complex e1 = std::polar(1.0, phi1);
    const Complex e2 = std::polar(1.0, phi2);
    Eigen::MatrixXcd u(2, 2);
    u(0, 0) = e1 * s;
    u(0, 1) = -std::conj(e2) * c;
    u(1, 0) = e2 * c;
    u(1, 1) = std::conj(e1) * s;
    return TransitionMatrix(ComplexMatrix(std::move(u)));
}

TransitionMatrix bronzan_rotation(double theta1, double theta2) {
    require_finite({theta1, theta2}, "bronzan_rotation");
    const double s1 = std::sin(theta1);
    const double c1 = std::cos(theta1);
    const double s2 = std::sin(theta2);
    const double c2 = std::cos(theta2);
    Eigen::MatrixXcd u(3, 3);
    u << c1 * c2, s1, c1 * s2,
         -s1 * c2, c1, -s1 * s2,
         -s2, 0.0, c2;
    return TransitionMatrix(ComplexMatrix(std::move(u)));
}

TransitionMatrix dft_matrix(std::size_t d) {
    require_dimension(d, "dft_matrix");
    const auto n = static_cast<Eigen::Index>(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    Eigen::MatrixXcd f(n, n);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            // Reducing jk mod d first keeps F exactly symmetric and the angle small.
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % d) /
                                 static_cast<double>(d);
            f(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = std::polar(scale, angle);
        }
    }
    return TransitionMatrix(ComplexMatrix(std::move(f)));
}

TransitionMatrix random_unitary(std::size_t d, std::uint64_t seed) {
    require_dimension(d, "random_unitary");
    const auto n = static_cast<Eigen::Index>(d);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd z(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd& r = qr.matrixQR();
    // Make diag(R) real positive so Q is Haar distributed.
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex rkk = r(k, k);
        const double mod = std::abs(rkk);
        const Complex phase = mod > 0.0 ? rkk / mod : Complex(1.0, 0.0);
        q.col(k) *= phase;
    }
    return TransitionMatrix(ComplexMatrix(std::move(q)));
}

}  // namespace incompat
