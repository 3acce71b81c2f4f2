// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#include "frozen_edge/frozencov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "frozen_edge/parallel.hpp"

namespace frozen_edge {

namespace {

void check_spacing(const std::vector<double>& z) {
    for (size_t i = 1; i < z.size(); ++i)
        if (std::fabs(z[i] - z[i - 1]) < 1e-13 * std::max(1.0, std::fabs(z[i])))
            throw std::runtime_error("inv_cov: degenerate zero spacing at i=" + std::to_string(i));
}

Matrix inv_cov_impl(const EnsembleParams& p, const ZeroSet& zeros, bool use_parallel) {
    const int n = static_cast<int>(zeros.zeros.size());
    const std::vector<double>& z = zeros.zeros;
    check_spacing(z);
    Matrix s(n, n);
    auto run = [&](auto&& body) {
        if (use_parallel)
            parallel_for(n, body);
        else
            serial_for(n, body);
    };
    if (p.family == Family::Laguerre) {
        std::vector<double> r(n);
        for (int i = 0; i < n; ++i) r[i] = std::sqrt(z[i]);
        run([&](int i) {
            std::vector<double> terms;
            terms.reserve(2 * n);
            for (int l = 0; l < n; ++l) {
                if (l == i) continue;
                const double dm = r[i] - r[l], dp = r[i] + r[l];
                terms.push_back(1.0 / (dm * dm));
                terms.push_back(1.0 / (dp * dp));
            }
            s(i, i) = 1.0 + p.nu / z[i] + pairwise_sum(terms);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const double dm = r[i] - r[j], dp = r[i] + r[j];
                s(i, j) = 1.0 / (dp * dp) - 1.0 / (dm * dm);
            }
        });
    } else if (p.family == Family::JacobiAlgebraic) {
        run([&](int j) {
            std::vector<double> terms;
            terms.reserve(n);
            for (int l = 0; l < n; ++l) {
                if (l == j) continue;
                const double d = z[j] - z[l];
                terms.push_back(1.0 / (d * d));
            }
            const double om = 1.0 - z[j], op = 1.0 + z[j];
            s(j, j) = pairwise_sum(terms) + 0.5 * (p.alpha + 1.0) / (om * om) +
                      0.5 * (p.beta + 1.0) / (op * op);
            for (int i = 0; i < n; ++i) {
                if (i == j) continue;
                const double d = z[i] - z[j];
                s(i, j) = -1.0 / (d * d);
            }
        });
    } else {
        run([&](int j) {
            const double w2 = 1.0 - z[j] * z[j];
            std::vector<double> terms;
            terms.reserve(n);
            for (int l = 0; l < n; ++l) {
                if (l == j) continue;
                const double d = z[j] - z[l];
                terms.push_back(w2 / (d * d));
            }
            s(j, j) = 4.0 * pairwise_sum(terms) +
                      2.0 * (p.alpha + 1.0) * (1.0 + z[j]) / (1.0 - z[j]) +
                      2.0 * (p.beta + 1.0) * (1.0 - z[j]) / (1.0 + z[j]);
            for (int i = 0; i < n; ++i) {
                if (i == j) continue;
                const double d = z[i] - z[j];
                s(i, j) = -4.0 * std::sqrt((1.0 - z[i] * z[i]) * (1.0 - z[j] * z[j])) / (d * d);
            }
        });
    }
    // enforce exact symmetry; the two formulas for (i,j)/(j,i) round alike
    // everywhere except the trig off-diagonals, where sqrt products commute
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s(j, i) = s(i, j);
    return s;
}

void check_jacobi_args(const ZeroSet& zeros, double alpha, double beta, const char* who) {
    if (zeros.params.family == Family::Laguerre)
        throw std::invalid_argument(std::string(who) + ": zeros are not from a Jacobi table");
    if (zeros.params.alpha != alpha || zeros.params.beta != beta)
        throw std::invalid_argument(std::string(who) + ": zeros built with different parameters");
}

}  // namespace

namespace kernels {

Matrix inv_cov_serial(const EnsembleParams& p, const ZeroSet& zeros) {
    return inv_cov_impl(p, zeros, false);
}
Matrix inv_cov_parallel(const EnsembleParams& p, const ZeroSet& zeros) {
    return inv_cov_impl(p, zeros, true);
}

Matrix sandwich_serial(const Matrix& t, std::span<const double> inv_lambda) {
    const int n = t.rows();
    Matrix out(n, n);
    serial_for(n, [&](int i) {
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += t(i, k) * inv_lambda[k] * t(j, k);
            out(i, j) = s;
        }
    });
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out(j, i) = out(i, j);
    return out;
}

Matrix sandwich_parallel(const Matrix& t, std::span<const double> inv_lambda) {
    const int n = t.rows();
    Matrix out(n, n);
    parallel_for(n, [&](int i) {
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += t(i, k) * inv_lambda[k] * t(j, k);
            out(i, j) = s;
        }
    });
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out(j, i) = out(i, j);
    return out;
}

}  // namespace kernels

Matrix inv_cov_jacobi_algebraic(const ZeroSet& zeros, double alpha, double beta) {
    check_jacobi_args(zeros, alpha, beta, "inv_cov_jacobi_algebraic");
    EnsembleParams p =
        EnsembleParams::jacobi_algebraic(alpha, beta, static_cast<int>(zeros.zeros.size()));
    return kernels::inv_cov_parallel(p, zeros);
}

Matrix inv_cov_jacobi_trig(const ZeroSet& zeros, double alpha, double beta) {
    check_jacobi_args(zeros, alpha, beta, "inv_cov_jacobi_trig");
    const int n = static_cast<int>(zeros.zeros.size());
    EnsembleParams pt = EnsembleParams::jacobi_trigonometric(alpha, beta, n);
    Matrix st = kernels::inv_cov_parallel(pt, zeros);
    // consistency: s~ must equal D s D with D = diag(2 sqrt(1-z_i^2))
    EnsembleParams pa = EnsembleParams::jacobi_algebraic(alpha, beta, n);
    Matrix sa = kernels::inv_cov_parallel(pa, zeros);
    double defect = 0.0;
    for (int i = 0; i < n; ++i) {
        const double di = 2.0 * std::sqrt(1.0 - zeros.zeros[i] * zeros.zeros[i]);
        for (int j = 0; j < n; ++j) {
            const double dj = 2.0 * std::sqrt(1.0 - zeros.zeros[j] * zeros.zeros[j]);
            defect = std::max(defect, std::fabs(st(i, j) - di * sa(i, j) * dj));
        }
    }
    if (defect > 1e-10 * max_abs(st))
        throw std::runtime_error("inv_cov_jacobi_trig: diagonal-conjugation check failed");
    return st;
}

Matrix inv_cov_laguerre(const ZeroSet& zeros, double nu) {
    if (zeros.params.family != Family::Laguerre || zeros.params.nu != nu)
        throw std::invalid_argument("inv_cov_laguerre: zeros not from the requested Laguerre table");
    EnsembleParams p = EnsembleParams::laguerre(nu, static_cast<int>(zeros.zeros.size()));
    return kernels::inv_cov_parallel(p, zeros);
}

SpectralCov assemble(const EnsembleParams& params) {
    const int n = params.dim_n;
    RecurrenceTable table = params.is_jacobi() ? jacobi_recurrence(params.alpha, params.beta, n)
                                               : laguerre_recurrence(params.nu, n);
    ZeroSet zeros = find_zeros(table, n);
    zeros.params.family = params.family;

    SpectralCov out;
    out.params = params;
    switch (params.family) {
        case Family::JacobiAlgebraic:
            out.s_matrix = inv_cov_jacobi_algebraic(zeros, params.alpha, params.beta);
            break;
        case Family::JacobiTrigonometric:
            out.s_matrix = inv_cov_jacobi_trig(zeros, params.alpha, params.beta);
            break;
        case Family::Laguerre:
            out.s_matrix = inv_cov_laguerre(zeros, params.nu);
            break;
    }

    out.eigenvalues.resize(n);
    for (int k = 1; k <= n; ++k)
        out.eigenvalues[k - 1] = params.is_jacobi()
                                     ? 2.0 * k * (2.0 * n + params.alpha + params.beta + 1.0 - k)
                                     : 2.0 * k;

    out.t_matrix = build_t_matrix(params, table, zeros);

    std::vector<double> inv_lambda(n);
    for (int k = 0; k < n; ++k) inv_lambda[k] = 1.0 / out.eigenvalues[k];
    out.sigma_spectral = kernels::sandwich_parallel(out.t_matrix.entries, inv_lambda);
    if (params.family == Family::JacobiAlgebraic) {
        // the closed spectrum lives in trigonometric coordinates; conjugate
        // back with D = diag(2 sqrt(1-z_i^2)): sigma = D sigma~ D
        for (int i = 0; i < n; ++i) {
            const double di = 2.0 * std::sqrt(1.0 - zeros.zeros[i] * zeros.zeros[i]);
            for (int j = 0; j < n; ++j) {
                const double dj = 2.0 * std::sqrt(1.0 - zeros.zeros[j] * zeros.zeros[j]);
                out.sigma_spectral(i, j) *= di * dj;
            }
        }
    }

    out.sigma_direct = spd_inverse(out.s_matrix);
    out.route_discrepancy = max_abs_diff(out.sigma_spectral, out.sigma_direct);
    return out;
}

}  // namespace frozen_edge
