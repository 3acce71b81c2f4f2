// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROZEN_EDGE_QUADRATURE_HPP
#define FROZEN_EDGE_QUADRATURE_HPP

#include <functional>

namespace frozen_edge {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int refinements = 0;
};

/// Integrate f over [0,1] where f behaves like y^endpoint_exponent times an
/// analytic factor near y = 0 (endpoint_exponent > -1) and oscillates at
/// angular frequency <= osc_freq.  Geometric mesh graded toward 0 with ratio
/// 1/2 and a 15-point Gauss rule per panel; panels are split so each carries
/// at most a fraction of an oscillation period.  Successive refinements must
/// agree to max(abs_tol, rel_tol*|value|) within max_refinements, else
/// throws std::runtime_error.
QuadResult integrate_graded_01(const std::function<double(double)>& f, double endpoint_exponent,
                               double osc_freq, double abs_tol = 1e-10, double rel_tol = 1e-9,
                               int max_refinements = 20);

/// Tanh-sinh rule on [0,1], used as the independent cross-check quadrature.
/// The integrand receives both y and 1-y so it can treat the upper endpoint
/// without cancellation.
QuadResult integrate_tanh_sinh_01(const std::function<double(double, double)>& f,
                                  double tol = 1e-12, int max_levels = 12);

/// The 15-point Gauss-Legendre rule on [-1,1] backing the graded mesh,
/// generated at first use from the Legendre recurrence (Golub-Welsch nodes,
/// Christoffel-function weights).  Exposed for tests.
struct GaussRule {
    double node[15];
    double weight[15];
};
const GaussRule& gauss15();

}  // namespace frozen_edge

#endif
