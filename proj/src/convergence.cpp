// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#include "frozen_edge/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frozen_edge/dualpoly.hpp"
#include "frozen_edge/frozencov.hpp"
#include "frozen_edge/linalg.hpp"
#include "frozen_edge/parallel.hpp"

namespace frozen_edge {

double StepFn::value_at(double y) const {
    int k = static_cast<int>(std::floor(y * n));
    k = std::clamp(k, 0, n - 1);
    return samples[k];
}

double StepFn::l2_norm() const {
    double s = 0.0;
    for (double v : samples) s += v * v;
    return std::sqrt(s / n);
}

StepFn step_fn(const EnsembleParams& params, int r) {
    const int n = params.dim_n;
    if (r < 1 || r > n) throw std::invalid_argument("step_fn: r must be in [1, N]");
    RecurrenceTable table = params.is_jacobi() ? jacobi_recurrence(params.alpha, params.beta, n)
                                               : laguerre_recurrence(params.nu, n);
    ZeroSet zeros = find_zeros(table, n);
    StepFn fn;
    fn.n = n;
    fn.r = r;
    fn.samples.resize(n);
    const double sqn = std::sqrt(static_cast<double>(n));
    if (params.is_jacobi()) {
        const double z = zeros.zeros[n - r];
        const double w = std::sqrt(1.0 - z * z);
        DualEvaluation q = dual_eval_all(table, n, z);
        for (int k = 0; k < n; ++k) fn.samples[k] = sqn * w * q.values[k];
    } else {
        const double z = zeros.zeros[r - 1];
        const double w = std::sqrt(z);
        DualEvaluation q = dual_eval_all(table, n, z);
        for (int k = 0; k < n; ++k)
            fn.samples[k] = (k % 2 == 0 ? 1.0 : -1.0) * sqn * w * q.values[k];
    }
    return fn;
}

HWeights h_weights(int n, double alpha, double beta) {
    if (n < 1) throw std::invalid_argument("h_weights: n must be >= 1");
    HWeights h;
    h.alpha = alpha;
    h.beta = beta;
    h.hn.n = n;
    h.hn.r = 0;
    h.hn.samples.resize(n);
    const double n2 = static_cast<double>(n) * n;
    for (int k = 0; k < n; ++k)
        h.hn.samples[k] = n2 / (2.0 * (k + 1) * (2.0 * n + alpha + beta - k));
    return h;
}

double HWeights::value_at(double y) const { return y >= 1.0 ? 0.5 : hn.value_at(y); }

double HWeights::limit(double y) const { return 1.0 / (2.0 * y * (2.0 - y)); }

bool HWeights::bound_holds(double y) const {
    const double cap = y > 0.0 ? std::min(0.5 * hn.n, 0.5 / y) : 0.5 * hn.n;
    return value_at(y) <= cap * (1.0 + 1e-12);
}

double spectral_step_sum(const EnsembleParams& params, int r, int s) {
    const int n = params.dim_n;
    StepFn fr = step_fn(params, r);
    StepFn fs = (s == r) ? fr : step_fn(params, s);
    HWeights h = h_weights(n, params.alpha, params.beta);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += h.hn.samples[k] * fr.samples[k] * fs.samples[k];
    return sum / n;
}

double sup_deviation(const StepFn& fn, const EnsembleParams& params, const BesselZeroTable& table,
                     double y_max) {
    double worst = 0.0;
    for (int k = 0; k < fn.n; ++k) {
        const double mid = (k + 0.5) / fn.n;
        if (mid > y_max) break;
        const double f = params.is_jacobi() ? limit_fn_jacobi(table, fn.r, mid)
                                            : limit_fn_laguerre(table, fn.r, mid);
        worst = std::max(worst, std::fabs(fn.samples[k] - f));
    }
    return worst;
}

ConvergenceReport scaled_cov_sequence(const EnsembleParams& tmpl, int r, int s,
                                      const std::vector<int>& n_grid) {
    if (n_grid.size() < 3)
        throw std::invalid_argument("scaled_cov_sequence: rate fit needs >= 3 grid points");
    for (size_t i = 1; i < n_grid.size(); ++i)
        if (n_grid[i] <= n_grid[i - 1])
            throw std::invalid_argument("scaled_cov_sequence: n_grid must be strictly increasing");
    if (r < 1 || s < 1 || r > n_grid.front() || s > n_grid.front())
        throw std::invalid_argument("scaled_cov_sequence: r, s must be within min(n_grid)");

    ConvergenceReport rep;
    rep.params = tmpl;
    rep.r = r;
    rep.s = s;
    rep.n_grid = n_grid;
    const int g = static_cast<int>(n_grid.size());
    rep.finite_values.resize(g);
    rep.sup_errors_stepfn.resize(g);

    const double order = tmpl.is_jacobi() ? tmpl.alpha : tmpl.nu - 1.0;
    BesselZeroTable jtab = bessel_zeros(order, std::max(r, s));
    LimitKind kind = tmpl.family == Family::JacobiTrigonometric ? LimitKind::JacobiTrig
                     : tmpl.family == Family::JacobiAlgebraic   ? LimitKind::JacobiAlg
                                                                : LimitKind::LaguerreHard;
    rep.limit = limit_cov(kind, jtab, r, s);

    // per-N assemblies are independent
    parallel_for(g, [&](int gi) {
        const int n = n_grid[gi];
        EnsembleParams p = tmpl;
        p.dim_n = n;
        SpectralCov cov = assemble(p);
        double entry, scale;
        if (tmpl.family == Family::Laguerre) {
            entry = cov.sigma_spectral(r - 1, s - 1);
            scale = n;
        } else {
            entry = cov.sigma_spectral(n - r, n - s);
            scale = tmpl.family == Family::JacobiTrigonometric ? static_cast<double>(n) * n : 1.0;
        }
        rep.finite_values[gi] = scale * entry;
        StepFn fn = step_fn(p, r);
        rep.sup_errors_stepfn[gi] = sup_deviation(fn, p, jtab, kSupNormYMax);
    });

    rep.abs_errors.resize(g);
    for (int i = 0; i < g; ++i) rep.abs_errors[i] = std::fabs(rep.finite_values[i] - rep.limit.value);
    std::vector<double> ns(n_grid.begin(), n_grid.end());
    rep.fitted_rate = loglog_slope(ns, rep.abs_errors);
    return rep;
}

}  // namespace frozen_edge
