// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROZEN_EDGE_FROZENCOV_HPP
#define FROZEN_EDGE_FROZENCOV_HPP

#include <vector>

#include "frozen_edge/dualpoly.hpp"
#include "frozen_edge/linalg.hpp"
#include "frozen_edge/orthopoly.hpp"

namespace frozen_edge {

/// Inverse covariance of the frozen Jacobi ensemble in algebraic coordinates:
///   s_jj = sum_{l != j} (z_j-z_l)^-2 + (a+1)/2 (1-z_j)^-2 + (b+1)/2 (1+z_j)^-2
///   s_ij = -(z_i-z_j)^-2.
Matrix inv_cov_jacobi_algebraic(const ZeroSet& zeros, double alpha, double beta);

/// Trigonometric-coordinate inverse covariance
///   s~_jj = 4 sum_{l != j} (1-z_j^2)/(z_j-z_l)^2
///           + 2(a+1)(1+z_j)/(1-z_j) + 2(b+1)(1-z_j)/(1+z_j)
///   s~_ij = -4 sqrt((1-z_i^2)(1-z_j^2)) / (z_i-z_j)^2,
/// verified on construction against the diagonal conjugation
/// s~ = D s D, D = diag(2 sqrt(1-z_i^2)), to 1e-10 relative; a mismatch
/// throws std::runtime_error.
Matrix inv_cov_jacobi_trig(const ZeroSet& zeros, double alpha, double beta);

/// Laguerre inverse covariance in r_i = sqrt(z_i) coordinates:
///   s_ii = 1 + nu/r_i^2 + sum_{l != i} (r_i-r_l)^-2 + sum_{l != i} (r_i+r_l)^-2
///   s_ij = (r_i+r_j)^-2 - (r_i-r_j)^-2.
Matrix inv_cov_laguerre(const ZeroSet& zeros, double nu);

/// Inverse covariance, closed-form spectrum, eigenvector matrix, and the
/// covariance computed by two independent routes:
///   sigma_spectral = T diag(1/lambda) T^T  (eigenvalues in closed form:
///     lambda_k = 2k(2N+a+b+1-k) trigonometric, lambda_k = 2k Laguerre; the
///     algebraic family reuses the trigonometric spectrum through the
///     conjugation sigma = D sigma~ D),
///   sigma_direct   = S^-1 by dense Cholesky solve.
/// route_discrepancy is the max absolute entry difference.
struct SpectralCov {
    EnsembleParams params;
    Matrix s_matrix;
    std::vector<double> eigenvalues;
    OrthoMatrix t_matrix;
    Matrix sigma_spectral;
    Matrix sigma_direct;
    double route_discrepancy = 0.0;
};

SpectralCov assemble(const EnsembleParams& params);

namespace kernels {
// serial/OpenMP pairs for the two dense hot loops; identical output
Matrix inv_cov_serial(const EnsembleParams& params, const ZeroSet& zeros);
Matrix inv_cov_parallel(const EnsembleParams& params, const ZeroSet& zeros);
Matrix sandwich_serial(const Matrix& t, std::span<const double> inv_lambda);
Matrix sandwich_parallel(const Matrix& t, std::span<const double> inv_lambda);
}  // namespace kernels

}  // namespace frozen_edge

#endif
