// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROZEN_EDGE_DUALPOLY_HPP
#define FROZEN_EDGE_DUALPOLY_HPP

#include <vector>

#include "frozen_edge/linalg.hpp"
#include "frozen_edge/orthopoly.hpp"

namespace frozen_edge {

/// Normalization constant of the dual family: sum_i (1-z_i^2) over the
/// degree-N Jacobi zeros in closed form,
///   h_N = 4N(N+a)(N+b)(N+a+b) / ((2N+a+b)^2 (2N+a+b-1)).
/// The Laguerre analogue (sum_i z_i) is N(N+nu-1).
double jacobi_dual_norm(double alpha, double beta, int n);
double laguerre_dual_norm(double nu, int n);

/// Values Q_{0,N}(x) .. Q_{N-1,N}(x) of the renormalized dual (de Boor-Saff)
/// polynomials: the three-term recurrence read with the table coefficients in
/// reverse order,
///   x Q_k = a_{N-k} Q_{k-1} + b_{N-k-1} Q_k + a_{N-k-1} Q_{k+1},
/// started from Q_{-1} = 0 and Q_0 = 1/sqrt(h_N) (Jacobi) resp.
/// 1/sqrt(N(N+nu-1)) (Laguerre).
struct DualEvaluation {
    EnsembleParams params;
    double x = 0.0;
    std::vector<double> values;
};
DualEvaluation dual_eval_all(const RecurrenceTable& table, int n, double x);

/// Dual Christoffel numbers: the weights of the discrete measure on the
/// degree-N zeros against which the duals are orthonormal,
///   w*_i = p_{N-1}(z_i) / (a_N p'_N(z_i)) > 0,  sum_i w*_i = 1,
/// where a_N is the off-diagonal recurrence coefficient at index N.  (These
/// equal (1-z_i^2)/h_N for Jacobi and z_i/(N(N+nu-1)) for Laguerre, which the
/// tests verify.)  Throws std::runtime_error on a positivity violation,
/// which would indicate a zero-finding or recurrence bug upstream.
struct DualWeights {
    std::vector<double> w;
};
DualWeights dual_christoffel(const RecurrenceTable& table, int n, const ZeroSet& zeros);

/// The orthogonal matrix T_N with entries
///   T[i][j] = sqrt(1-z_i^2) Q_{j-1,N}(z_i)   (Jacobi)
///   T[i][j] = sqrt(z_i)     Q_{j-1,N}(z_i)   (Laguerre),
/// whose columns are the inverse-covariance eigenvectors.  Rows are built
/// from the equivalent reversed orthonormal-polynomial form
///   T[i][j] = sign(p_{N-1}(z_i)) p_{N-j}(z_i) sqrt(w_i)
/// (w_i the Gauss weight), which follows the dominant recurrence solution
/// and stays stable where the literal dual recurrence blows up (Laguerre
/// soft-edge rows).  max_orthogonality_residual = max |(T^T T - I)_{ij}|,
/// recomputed on construction.
struct OrthoMatrix {
    int n = 0;
    Matrix entries;
    double max_orthogonality_residual = 0.0;
};
OrthoMatrix build_t_matrix(const EnsembleParams& params, const RecurrenceTable& table,
                           const ZeroSet& zeros);

namespace kernels {
// serial reference and OpenMP row-parallel builders; identical output
Matrix t_matrix_serial(const RecurrenceTable& table, const ZeroSet& zeros);
Matrix t_matrix_parallel(const RecurrenceTable& table, const ZeroSet& zeros);
}  // namespace kernels

}  // namespace frozen_edge

#endif
