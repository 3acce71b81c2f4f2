// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROZEN_EDGE_LINALG_HPP
#define FROZEN_EDGE_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace frozen_edge {

/// Dense row-major matrix of doubles.  Just enough linear algebra for this
/// library; not a general-purpose type.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::span<double> row(int i) { return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)}; }
    std::span<const double> row(int i) const { return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)}; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_symmetry_defect(const Matrix& m);

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal d[0..n-1]
/// and off-diagonal e[1..n-1] (e[0] ignored), ascending.  Implicit-shift QL;
/// an eigenvalue that fails to deflate within `max_sweeps` sweeps is
/// recomputed by Sturm-sequence bisection, and only if that also fails does
/// the routine throw std::runtime_error.
std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> e,
                                        int max_sweeps = 60);

/// Sturm-sequence bisection for the k-th (0-based, ascending) eigenvalue of
/// the same tridiagonal matrix.  Used as the QL fallback and as an
/// independent cross-check in tests.
double tridiag_eigenvalue_bisect(std::span<const double> d, std::span<const double> e, int k);

/// Eigenvalues of a dense symmetric matrix, ascending: Householder reduction
/// to tridiagonal form followed by the QL iteration above.
std::vector<double> symmetric_eigenvalues(const Matrix& a);

/// Cholesky factor L (lower triangular, a = L L^T).  Throws
/// std::runtime_error if the matrix is not numerically positive definite;
/// callers treat that as evidence of an upstream bug, not something to patch.
Matrix cholesky(const Matrix& a);

/// Solve a x = b for symmetric positive definite a via Cholesky.
std::vector<double> cholesky_solve(const Matrix& chol_l, std::span<const double> b);

/// Inverse of a symmetric positive definite matrix via Cholesky solves.
Matrix spd_inverse(const Matrix& a);

/// Cascade (pairwise) summation; limits cancellation growth in the long
/// inverse-square sums assembled by the covariance module.
double pairwise_sum(std::span<const double> v);

/// Ordinary least-squares slope of log(y) against log(x).  Needs >= 3 points
/// and positive data; throws std::invalid_argument otherwise.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace frozen_edge

#endif
