// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROZEN_EDGE_BESSEL_HPP
#define FROZEN_EDGE_BESSEL_HPP

#include <vector>

#include "frozen_edge/linalg.hpp"

namespace frozen_edge {

/// Bessel function of the first kind J_alpha(z) for alpha > -1, z >= 0.
/// Power series with compensated (double-double) term accumulation below
/// |z| = 12, Steed's continued-fraction method above; the two branches agree
/// to better than 1e-12 across the overlap window [10, 14] (unit-tested).
double bessel_j(double alpha, double z);

/// dJ_alpha/dz for z > 0, from the exact ladder identities
/// J'_a = (J_{a-1} - J_{a+1})/2 (a >= 0, with J_{-1} = -J_1) and
/// J'_a = (a/z) J_a - J_{a+1} (a in (-1,0)).
double bessel_j_prime(double alpha, double z);

namespace detail {
// individual branches, exposed for the overlap-agreement test
double bessel_j_series(double alpha, double z);
double bessel_j_steed(double alpha, double z);
}  // namespace detail

/// First positive zeros j_{alpha,1} < j_{alpha,2} < ... of J_alpha together
/// with the derivative values J'_alpha(j_{alpha,r}).
struct BesselZeroTable {
    double alpha = 0.0;
    std::vector<double> zeros;
    std::vector<double> derivs;
};

/// Scan-bracket each zero, then refine by Newton.  Throws std::runtime_error
/// if a bracket cannot be found or Newton fails to settle.
BesselZeroTable bessel_zeros(double alpha, int r_max);

/// Hard-edge limit profile of the r-th Jacobi step function:
///   f(y) = -sqrt(2)/J'_a(j_r) * sqrt(1-y) * J_a(j_r (1-y)),   y in [0,1),
/// built on the table's order a.  f(0) = 0 and f'(0) = sqrt(2) j_r.
double limit_fn_jacobi(const BesselZeroTable& table, int r, double y);

/// Laguerre analogue on order a = nu - 1:
///   f(y) = -J_a(j_r sqrt(1-y)) / J'_a(j_r),   f(0) = 0, f'(0) = j_r / 2.
double limit_fn_laguerre(const BesselZeroTable& table, int r, double y);

/// Which hard-edge covariance limit a LimitValue refers to.
enum class LimitKind { JacobiTrig, JacobiAlg, LaguerreHard };

/// A limit covariance entry
///   JacobiTrig:   1/(J'(j_r) J'(j_s)) * I(j_r, j_s)
///   JacobiAlg:    the JacobiTrig value divided by 4 j_r j_s, as computed
///   LaguerreHard: same integral as JacobiTrig on order nu-1 (the
///                 substitution u = sqrt(1-y) removes the 1/(2y) factor)
/// with I(j_r,j_s) = int_0^1 y/(1-y^2) J(j_r y) J(j_s y) dy.
struct LimitValue {
    LimitKind kind = LimitKind::JacobiTrig;
    int r = 1, s = 1;
    double value = 0.0;
    double quad_error_estimate = 0.0;
};

/// table order: alpha for the Jacobi kinds, nu-1 for LaguerreHard.
LimitValue limit_cov(LimitKind kind, const BesselZeroTable& table, int r, int s);

/// Gram matrix of the limit functions in L2([0,1]); identical for the Jacobi
/// and Laguerre profiles of the same order and equal to the identity.
Matrix limit_orthonormality(const BesselZeroTable& table, int r_max);

}  // namespace frozen_edge

#endif
