// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#include "frozen_edge/dualpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "frozen_edge/parallel.hpp"

namespace frozen_edge {

double jacobi_dual_norm(double alpha, double beta, int n) {
    const double s = 2.0 * n + alpha + beta;
    return 4.0 * n * (n + alpha) * (n + beta) * (n + alpha + beta) / (s * s * (s - 1.0));
}

double laguerre_dual_norm(double nu, int n) { return static_cast<double>(n) * (n + nu - 1.0); }

static double dual_start(const RecurrenceTable& t, int n) {
    if (t.family == Family::Laguerre) return 1.0 / std::sqrt(laguerre_dual_norm(t.nu, n));
    return 1.0 / std::sqrt(jacobi_dual_norm(t.alpha, t.beta, n));
}

DualEvaluation dual_eval_all(const RecurrenceTable& t, int n, double x) {
    if (n < 1 || n > t.n_max())
        throw std::domain_error("dual_eval_all: n exceeds table depth");
    DualEvaluation out;
    out.params.family = t.family;
    out.params.alpha = t.alpha;
    out.params.beta = t.beta;
    out.params.nu = t.nu;
    out.params.dim_n = n;
    out.x = x;
    out.values.resize(n);
    double qm = 0.0, qc = dual_start(t, n);
    out.values[0] = qc;
    for (int k = 0; k + 1 < n; ++k) {
        const double qn = ((x - t.b[n - k - 1]) * qc - t.a[n - k] * qm) / t.a[n - k - 1];
        qm = qc;
        qc = qn;
        out.values[k + 1] = qc;
    }
    return out;
}

DualWeights dual_christoffel(const RecurrenceTable& t, int n, const ZeroSet& zeros) {
    if (static_cast<int>(zeros.zeros.size()) != n)
        throw std::invalid_argument("dual_christoffel: zero set does not match degree");
    if (n > t.n_max()) throw std::domain_error("dual_christoffel: n exceeds table depth");
    DualWeights out;
    out.w.resize(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = zeros.zeros[i];
        const double pnm1 = eval_orthonormal(t, n - 1, z);
        const ValueAndDerivative pn = eval_orthonormal_with_derivative(t, n, z);
        const double w = pnm1 / (t.a[n] * pn.derivative);
        if (!(w > 0.0))
            throw std::runtime_error("dual_christoffel: non-positive weight at i=" +
                                     std::to_string(i) + " (upstream zero or recurrence bug)");
        out.w[i] = w;
        sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-8)
        throw std::runtime_error("dual_christoffel: weights sum to " + std::to_string(sum));
    return out;
}

namespace kernels {

// One row of T_N: the full reversed orthonormal vector at z_i, normalized.
// Everything is formed from ratios of same-pass values, so the on-the-fly
// rescaling of the recurrence cancels out.
static void t_matrix_row(const RecurrenceTable& t, double z, int n, double* row) {
    ScaledValues sv = eval_orthonormal_all_scaled(t, n - 1, z);
    // normalize by the largest entry first; the Laguerre values reach
    // e^(z/2) magnitudes whose squares would overflow
    double peak = 0.0;
    for (int k = 0; k < n; ++k) peak = std::max(peak, std::fabs(sv.values[k]));
    const double inv_peak = 1.0 / peak;
    double norm2 = 0.0;
    for (int k = 0; k < n; ++k) {
        const double s = sv.values[k] * inv_peak;
        norm2 += s * s;
    }
    const double inv = inv_peak / std::sqrt(norm2);
    const double sgn = sv.values[n - 1] >= 0.0 ? 1.0 : -1.0;
    for (int j = 0; j < n; ++j) row[j] = sgn * sv.values[n - 1 - j] * inv;
}

Matrix t_matrix_serial(const RecurrenceTable& t, const ZeroSet& zeros) {
    const int n = static_cast<int>(zeros.zeros.size());
    Matrix m(n, n);
    serial_for(n, [&](int i) { t_matrix_row(t, zeros.zeros[i], n, m.row(i).data()); });
    return m;
}

Matrix t_matrix_parallel(const RecurrenceTable& t, const ZeroSet& zeros) {
    const int n = static_cast<int>(zeros.zeros.size());
    Matrix m(n, n);
    parallel_for(n, [&](int i) { t_matrix_row(t, zeros.zeros[i], n, m.row(i).data()); });
    return m;
}

}  // namespace kernels

OrthoMatrix build_t_matrix(const EnsembleParams& params, const RecurrenceTable& table,
                           const ZeroSet& zeros) {
    const int n = static_cast<int>(zeros.zeros.size());
    if (params.dim_n != n)
        throw std::invalid_argument("build_t_matrix: params dimension does not match zeros");
    if ((params.family == Family::Laguerre) != (table.family == Family::Laguerre))
        throw std::invalid_argument("build_t_matrix: table family does not match params");
    OrthoMatrix out;
    out.n = n;
    out.entries = kernels::t_matrix_parallel(table, zeros);
    double resid = 0.0;
    const Matrix& m = out.entries;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += m(k, i) * m(k, j);
            resid = std::max(resid, std::fabs(s - (i == j ? 1.0 : 0.0)));
        }
    out.max_orthogonality_residual = resid;
    return out;
}

}  // namespace frozen_edge
