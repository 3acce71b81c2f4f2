// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROZEN_EDGE_CONVERGENCE_HPP
#define FROZEN_EDGE_CONVERGENCE_HPP

#include <vector>

#include "frozen_edge/bessel.hpp"
#include "frozen_edge/ensemble.hpp"

namespace frozen_edge {

/// Piecewise-constant function on [0,1): samples[k] is the value on
/// [k/N, (k+1)/N).
struct StepFn {
    int n = 0;
    int r = 0;
    std::vector<double> samples;

    double value_at(double y) const;
    double l2_norm() const;  // sqrt((1/N) sum samples^2)
};

/// The r-th hard-edge step function: one row of the orthogonal eigenvector
/// matrix scaled by sqrt(N),
///   Jacobi (either coordinate kind):
///     samples[k] = sqrt(N) sqrt(1-z^2) Q_k(z),  z = z_{N-r+1,N}
///   Laguerre (with the sign flip that orients the small-zero behavior):
///     samples[k] = sqrt(N) sqrt(z) (-1)^k Q_k(z),  z = z_{r,N}.
StepFn step_fn(const EnsembleParams& params, int r);

/// Discrete spectral weight h_N and its limit h(y) = 1/(2y(2-y)).
/// h_N(y) = N^2/(2(k+1)(2N+a+b-k)) on [k/N,(k+1)/N), with h_N(1) = 1/2,
/// and h_N(y) <= min(N/2, 1/(2y)) everywhere.
struct HWeights {
    StepFn hn;
    double alpha = 0.0, beta = 0.0;

    double value_at(double y) const;           // h_N with the y = 1 convention
    double limit(double y) const;              // h(y)
    bool bound_holds(double y) const;          // h_N(y) <= min(N/2, 1/(2y))
};
HWeights h_weights(int n, double alpha, double beta);

/// (1/N) sum_k h_N(k/N) f_{N,r}(k/N) f_{N,s}(k/N): the step-function form of
/// the scaled trigonometric covariance entry N^2 sigma~_{N-r+1,N-s+1}; exact
/// at finite N up to rounding.
double spectral_step_sum(const EnsembleParams& params, int r, int s);

/// Scaled covariance entries along an N-grid against the Bessel limit.
/// Scaling per family: N^2 sigma~_{N-r+1,N-s+1} (trigonometric),
/// sigma_{N-r+1,N-s+1} (algebraic), N sigma_{r,s} (Laguerre).
struct ConvergenceReport {
    EnsembleParams params;  // dim_n ignored; the grid supplies N
    int r = 1, s = 1;
    std::vector<int> n_grid;
    std::vector<double> finite_values;
    LimitValue limit;
    std::vector<double> abs_errors;
    double fitted_rate = 0.0;               // OLS slope of log err vs log N
    std::vector<double> sup_errors_stepfn;  // sup_{[0,0.8]} |f_{N,r} - f| per N
};

ConvergenceReport scaled_cov_sequence(const EnsembleParams& params_template, int r, int s,
                                      const std::vector<int>& n_grid);

/// Sup-norm deviation between a step function and the matching Bessel limit
/// profile over [0, y_max], evaluated at cell midpoints.
double sup_deviation(const StepFn& fn, const EnsembleParams& params, const BesselZeroTable& table,
                     double y_max);

/// y_max used by the sup-norm checks; convergence is only locally uniform on
/// [0,1), so the comparisons stop short of the endpoint.
inline constexpr double kSupNormYMax = 0.8;

/// Default N-grid for convergence reports.
inline const std::vector<int> kDefaultNGrid = {25, 50, 100, 200};

}  // namespace frozen_edge

#endif
