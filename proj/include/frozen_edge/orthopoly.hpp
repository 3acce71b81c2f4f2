// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROZEN_EDGE_ORTHOPOLY_HPP
#define FROZEN_EDGE_ORTHOPOLY_HPP

#include <span>
#include <vector>

#include "frozen_edge/ensemble.hpp"

namespace frozen_edge {

/// Three-term recurrence coefficients of an orthonormal polynomial family,
///   x p_k(x) = a_{k+1} p_{k+1}(x) + b_k p_k(x) + a_k p_{k-1}(x),
/// with p_0 = 1.  a is indexed 1..n_max (a[0] unused), b is indexed 0..n_max.
///
/// Jacobi (weight (1-x)^alpha (1+x)^beta on [-1,1], normalized):
///   a_k = sqrt(4k(k+a+b)(k+a)(k+b)) / (sqrt((2k+a+b)^2-1) (2k+a+b)),
///   b_k = (b^2-a^2)/((2k+a+b)(2k+a+b+2)),  b_0 = (b-a)/(a+b+2).
/// Laguerre (weight x^(nu-1) e^-x on (0,inf), normalized):
///   a_k = sqrt(k(k+nu-1)),  b_k = 2k+nu.
struct RecurrenceTable {
    Family family = Family::JacobiAlgebraic;
    double alpha = 0.0, beta = 0.0, nu = 0.0;
    std::vector<double> a;  // a[1..n_max]; a[0] = 0
    std::vector<double> b;  // b[0..n_max]

    int n_max() const { return static_cast<int>(b.size()) - 1; }
};

RecurrenceTable jacobi_recurrence(double alpha, double beta, int n_max);
RecurrenceTable laguerre_recurrence(double nu, int n_max);

/// Orthonormal polynomial of the given degree at x, by forward recurrence.
double eval_orthonormal(const RecurrenceTable& table, int degree, double x);

/// Value and derivative together (derivative by the differentiated
/// recurrence, no finite differences).
struct ValueAndDerivative {
    double value;
    double derivative;
};
ValueAndDerivative eval_orthonormal_with_derivative(const RecurrenceTable& table, int degree,
                                                    double x);

/// All values p_0(x)..p_{degree}(x) in one pass, rescaled on the fly so the
/// Laguerre values (which reach e^(x/2) magnitudes) never overflow.  Returns
/// the common log-scale: true p_k(x) = values[k] * exp(log_scale).
struct ScaledValues {
    std::vector<double> values;
    double log_scale;
};
ScaledValues eval_orthonormal_all_scaled(const RecurrenceTable& table, int degree, double x);

/// Zeros of the degree-N polynomial of a table, strictly ordered, with a
/// per-zero convergence certificate.
///
/// polish_residuals[i] is |p_N(z_i)| divided by the largest |p_k(z_i)|
/// (k <= N) seen in the evaluation.  The raw polynomial value would be the
/// natural certificate, but for Laguerre it scales like e^(z/2) and says
/// nothing; the normalized form stays comparable across families.
struct ZeroSet {
    EnsembleParams params;
    std::vector<double> zeros;
    std::vector<double> polish_residuals;
};

/// Golub-Welsch: the zeros are the eigenvalues of the symmetric tridiagonal
/// matrix built from the recurrence, here via implicit-shift QL with Sturm
/// bisection as fallback, then Newton-polished until |p_n| stagnates
/// (at most 8 steps).  Throws std::runtime_error on iteration-cap overrun and
/// std::domain_error if n exceeds the table depth.
ZeroSet find_zeros(const RecurrenceTable& table, int n);

/// How the hard-edge zero comparison centers the expected zero.
enum class ZeroAsymptotics {
    LeadingOrder,  // Jacobi 1 - j^2/(2N^2); Laguerre j^2/(4N+2nu)
    Refined        // Jacobi cos(j/nu_hat), nu_hat^2 = (N+(a+b+1)/2)^2 + (1-a^2-3b^2)/12
};

/// Deviations |z_(edge r) - predicted(j_r)| for r = 1..r_max, where the edge
/// is the upper one for Jacobi (z_{N-r+1}) and the lower one for Laguerre
/// (z_r).  bessel_zeros must hold j_{a,1..r_max} for the matching order
/// (alpha for Jacobi, nu-1 for Laguerre).  The Laguerre center ignores the
/// `mode` flag: its refined form j^2/(4N+2nu) is already the one used.
std::vector<double> hard_edge_zero_check(const ZeroSet& zeros, std::span<const double> bessel_zeros,
                                         int r_max, ZeroAsymptotics mode = ZeroAsymptotics::LeadingOrder);

}  // namespace frozen_edge

#endif
