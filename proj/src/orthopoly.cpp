// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#include "frozen_edge/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "frozen_edge/linalg.hpp"

namespace frozen_edge {

RecurrenceTable jacobi_recurrence(double alpha, double beta, int n_max) {
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::domain_error("jacobi_recurrence: alpha and beta must be > -1");
    if (n_max < 1) throw std::domain_error("jacobi_recurrence: n_max must be >= 1");
    RecurrenceTable t;
    t.family = Family::JacobiAlgebraic;
    t.alpha = alpha;
    t.beta = beta;
    t.a.assign(n_max + 1, 0.0);
    t.b.assign(n_max + 1, 0.0);
    t.b[0] = (beta - alpha) / (alpha + beta + 2.0);
    for (int k = 1; k <= n_max; ++k) {
        const double s = 2.0 * k + alpha + beta;
        // At k=1 with alpha+beta < -1 both (k+alpha+beta) and (s-1) are
        // negative; form the square first so their signs cancel.
        const double a2 = 4.0 * k * (k + alpha + beta) * (k + alpha) * (k + beta) /
                          ((s + 1.0) * (s - 1.0) * s * s);
        t.a[k] = std::sqrt(a2);
        t.b[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
    return t;
}

RecurrenceTable laguerre_recurrence(double nu, int n_max) {
    if (!(nu > 0.0)) throw std::domain_error("laguerre_recurrence: nu must be > 0");
    if (n_max < 1) throw std::domain_error("laguerre_recurrence: n_max must be >= 1");
    RecurrenceTable t;
    t.family = Family::Laguerre;
    t.nu = nu;
    t.a.assign(n_max + 1, 0.0);
    t.b.assign(n_max + 1, 0.0);
    for (int k = 0; k <= n_max; ++k) t.b[k] = 2.0 * k + nu;
    for (int k = 1; k <= n_max; ++k) t.a[k] = std::sqrt(k * (k + nu - 1.0));
    return t;
}

static void check_degree(const RecurrenceTable& t, int degree, const char* who) {
    if (degree < 0 || degree > t.n_max())
        throw std::domain_error(std::string(who) + ": degree " + std::to_string(degree) +
                                " exceeds table depth " + std::to_string(t.n_max()));
}

double eval_orthonormal(const RecurrenceTable& t, int degree, double x) {
    check_degree(t, degree, "eval_orthonormal");
    double pm = 0.0, pc = 1.0;
    for (int k = 0; k < degree; ++k) {
        const double pn = ((x - t.b[k]) * pc - (k > 0 ? t.a[k] * pm : 0.0)) / t.a[k + 1];
        pm = pc;
        pc = pn;
    }
    return pc;
}

ValueAndDerivative eval_orthonormal_with_derivative(const RecurrenceTable& t, int degree, double x) {
    check_degree(t, degree, "eval_orthonormal_with_derivative");
    double pm = 0.0, pc = 1.0, dm = 0.0, dc = 0.0;
    for (int k = 0; k < degree; ++k) {
        const double pn = ((x - t.b[k]) * pc - (k > 0 ? t.a[k] * pm : 0.0)) / t.a[k + 1];
        const double dn = ((x - t.b[k]) * dc + pc - (k > 0 ? t.a[k] * dm : 0.0)) / t.a[k + 1];
        pm = pc;
        pc = pn;
        dm = dc;
        dc = dn;
    }
    return {pc, dc};
}

ScaledValues eval_orthonormal_all_scaled(const RecurrenceTable& t, int degree, double x) {
    check_degree(t, degree, "eval_orthonormal_all_scaled");
    ScaledValues out;
    out.values.resize(degree + 1);
    out.log_scale = 0.0;
    double pm = 0.0, pc = 1.0;
    out.values[0] = pc;
    constexpr double kBig = 1e250;
    for (int k = 0; k < degree; ++k) {
        double pn = ((x - t.b[k]) * pc - (k > 0 ? t.a[k] * pm : 0.0)) / t.a[k + 1];
        if (std::fabs(pn) > kBig) {
            const double inv = 1.0 / kBig;
            for (int j = 0; j <= k; ++j) out.values[j] *= inv;
            pn *= inv;
            pc *= inv;
            out.log_scale += std::log(kBig);
        }
        pm = pc;
        pc = pn;
        out.values[k + 1] = pc;
    }
    return out;
}

ZeroSet find_zeros(const RecurrenceTable& t, int n) {
    if (n < 1 || n > t.n_max())
        throw std::domain_error("find_zeros: n must be in [1, n_max]");
    std::vector<double> d(t.b.begin(), t.b.begin() + n);
    std::vector<double> e(n, 0.0);
    for (int i = 1; i < n; ++i) e[i] = t.a[i];
    std::vector<double> z = tridiag_eigenvalues(d, e);

    ZeroSet out;
    out.params.family = t.family;
    out.params.alpha = t.alpha;
    out.params.beta = t.beta;
    out.params.nu = t.nu;
    out.params.dim_n = n;
    out.zeros = std::move(z);
    out.polish_residuals.assign(n, 0.0);

    for (int i = 0; i < n; ++i) {
        double zi = out.zeros[i];
        double best = std::numeric_limits<double>::infinity();
        bool settled = false;
        for (int it = 0; it < 8; ++it) {
            ValueAndDerivative vd = eval_orthonormal_with_derivative(t, n, zi);
            const double r = std::fabs(vd.value);
            if (!(r < best) || vd.derivative == 0.0) {
                settled = true;  // |p_n| stagnated
                break;
            }
            best = r;
            const double step = vd.value / vd.derivative;
            const double znew = zi - step;
            if (znew == zi) {
                settled = true;
                break;
            }
            zi = znew;
        }
        out.zeros[i] = zi;
        // residual relative to the largest recurrence value at the zero
        ScaledValues sv = eval_orthonormal_all_scaled(t, n, zi);
        double scale = 1.0;
        for (int k = 0; k <= n; ++k) scale = std::max(scale, std::fabs(sv.values[k]));
        out.polish_residuals[i] = std::fabs(sv.values[n]) / scale;
        if (!settled && out.polish_residuals[i] > 1e-8)
            throw std::runtime_error("find_zeros: Newton polish exceeded its iteration cap at i=" +
                                     std::to_string(i));
    }
    for (int i = 1; i < n; ++i)
        if (!(out.zeros[i - 1] < out.zeros[i]))
            throw std::runtime_error("find_zeros: zeros not strictly ordered after polish");
    return out;
}

std::vector<double> hard_edge_zero_check(const ZeroSet& zeros, std::span<const double> bessel_zeros,
                                         int r_max, ZeroAsymptotics mode) {
    if (r_max < 0) throw std::invalid_argument("hard_edge_zero_check: r_max must be >= 0");
    const int n = static_cast<int>(zeros.zeros.size());
    if (r_max > n || r_max > static_cast<int>(bessel_zeros.size()))
        throw std::invalid_argument("hard_edge_zero_check: r_max exceeds available zeros");
    std::vector<double> dev(r_max);
    const EnsembleParams& p = zeros.params;
    for (int r = 1; r <= r_max; ++r) {
        const double j = bessel_zeros[r - 1];
        if (p.family == Family::Laguerre) {
            const double predicted = j * j / (4.0 * n + 2.0 * p.nu);
            dev[r - 1] = std::fabs(zeros.zeros[r - 1] - predicted);
        } else {
            double predicted;
            if (mode == ZeroAsymptotics::Refined) {
                const double c = n + 0.5 * (p.alpha + p.beta + 1.0);
                const double nu_hat =
                    std::sqrt(c * c + (1.0 - p.alpha * p.alpha - 3.0 * p.beta * p.beta) / 12.0);
                predicted = std::cos(j / nu_hat);
            } else {
                predicted = 1.0 - j * j / (2.0 * static_cast<double>(n) * n);
            }
            dev[r - 1] = std::fabs(zeros.zeros[n - r] - predicted);
        }
    }
    return dev;
}

}  // namespace frozen_edge
