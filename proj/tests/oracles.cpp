// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

#include "frozen_edge/bessel.hpp"

namespace frozen_edge::oracles {

long double jacobi_a_ld(long double alpha, long double beta, int k) {
    const long double s = 2.0L * k + alpha + beta;
    return sqrtl(4.0L * k * (k + alpha + beta) * (k + alpha) * (k + beta) /
                 ((s + 1.0L) * (s - 1.0L) * s * s));
}

long double jacobi_b_ld(long double alpha, long double beta, int k) {
    if (k == 0) return (beta - alpha) / (alpha + beta + 2.0L);
    const long double s = 2.0L * k + alpha + beta;
    return (beta * beta - alpha * alpha) / (s * (s + 2.0L));
}

long double eval_orthonormal_ld(const RecurrenceTable& t, int degree, double x) {
    const bool jac = t.family != Family::Laguerre;
    auto a_ld = [&](int k) -> long double {
        return jac ? jacobi_a_ld(t.alpha, t.beta, k) : sqrtl((long double)k * (k + t.nu - 1.0L));
    };
    auto b_ld = [&](int k) -> long double {
        return jac ? jacobi_b_ld(t.alpha, t.beta, k) : 2.0L * k + (long double)t.nu;
    };
    long double pm = 0.0L, pc = 1.0L;
    for (int k = 0; k < degree; ++k) {
        const long double pn = ((x - b_ld(k)) * pc - (k > 0 ? a_ld(k) * pm : 0.0L)) / a_ld(k + 1);
        pm = pc;
        pc = pn;
    }
    return pc;
}

std::vector<double> grid_bisection_zeros(const RecurrenceTable& t, int n, double lo, double hi,
                                         int grid_points) {
    std::vector<double> out;
    double x0 = lo, f0 = eval_orthonormal(t, n, x0);
    for (int g = 1; g <= grid_points; ++g) {
        const double x1 = lo + (hi - lo) * g / grid_points;
        const double f1 = eval_orthonormal(t, n, x1);
        if (f0 == 0.0) out.push_back(x0);
        else if (f0 * f1 < 0.0) {
            double a = x0, b = x1, fa = f0;
            for (int it = 0; it < 100; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = eval_orthonormal(t, n, m);
                if (fa * fm <= 0.0)
                    b = m;
                else {
                    a = m;
                    fa = fm;
                }
                if (b - a < 1e-15 * std::max(1.0, std::fabs(a))) break;
            }
            out.push_back(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
    return out;
}

namespace {

// y'' expressed from the ODE; state integrated by classical RK4
template <typename Rhs>
double rk4(double y_end, double f0, double fp0, double step, Rhs rhs) {
    double y = 0.0, f = f0, fp = fp0;
    const int steps = static_cast<int>(std::ceil(y_end / step));
    const double h = y_end / steps;
    for (int i = 0; i < steps; ++i) {
        const double k1f = fp, k1p = rhs(y, f, fp);
        const double k2f = fp + 0.5 * h * k1p, k2p = rhs(y + 0.5 * h, f + 0.5 * h * k1f, fp + 0.5 * h * k1p);
        const double k3f = fp + 0.5 * h * k2p, k3p = rhs(y + 0.5 * h, f + 0.5 * h * k2f, fp + 0.5 * h * k2p);
        const double k4f = fp + h * k3p, k4p = rhs(y + h, f + h * k3f, fp + h * k3p);
        f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
        fp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        y += h;
    }
    return f;
}

}  // namespace

double ode_limit_jacobi(double alpha, double j, double y_end, double step) {
    return rk4(y_end, 0.0, std::sqrt(2.0) * j, step, [&](double y, double f, double) {
        const double om = 1.0 - y;
        return -f * (j * j * om * om - alpha * alpha + 0.25) / (om * om);
    });
}

double ode_limit_laguerre(double nu, double j, double y_end, double step) {
    return rk4(y_end, 0.0, 0.5 * j, step, [&](double y, double f, double fp) {
        const double om = 1.0 - y;
        return (om * fp - 0.25 * f * (j * j * om - (nu - 1.0) * (nu - 1.0))) / (om * om);
    });
}

std::vector<double> reversed_eigenvector(const RecurrenceTable& t, int n, double eigenvalue) {
    // rows k = 0..n-1: diag b[n-1-k], off-diag to k+1 is a[n-1-k]
    std::vector<double> diag(n), off(n, 0.0);
    for (int k = 0; k < n; ++k) diag[k] = t.b[n - 1 - k];
    for (int k = 0; k + 1 < n; ++k) off[k] = t.a[n - 1 - k];

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    const double shift = eigenvalue + 1e-11 * std::max(1.0, std::fabs(eigenvalue));
    for (int iter = 0; iter < 4; ++iter) {
        // solve (T - shift I) w = v by banded Gaussian elimination with row
        // pivoting (upper bandwidth grows to 2)
        std::vector<double> c0(n), c1(n, 0.0), c2(n, 0.0), rhs(v);
        for (int k = 0; k < n; ++k) {
            c0[k] = diag[k] - shift;
            if (k + 1 < n) c1[k] = off[k];
        }
        std::vector<double> sub(n, 0.0);
        for (int k = 0; k + 1 < n; ++k) sub[k + 1] = off[k];
        for (int k = 0; k + 1 < n; ++k) {
            if (std::fabs(sub[k + 1]) > std::fabs(c0[k])) {
                std::swap(c0[k], sub[k + 1]);
                std::swap(c1[k], c0[k + 1]);
                std::swap(c2[k], c1[k + 1]);
                std::swap(rhs[k], rhs[k + 1]);
            }
            if (c0[k] == 0.0) c0[k] = 1e-300;
            const double m = sub[k + 1] / c0[k];
            c0[k + 1] -= m * c1[k];
            c1[k + 1] -= m * c2[k];
            rhs[k + 1] -= m * rhs[k];
        }
        if (c0[n - 1] == 0.0) c0[n - 1] = 1e-300;
        std::vector<double> w(n);
        for (int k = n - 1; k >= 0; --k) {
            double s = rhs[k];
            if (k + 1 < n) s -= c1[k] * w[k + 1];
            if (k + 2 < n) s -= c2[k] * w[k + 2];
            w[k] = s / c0[k];
        }
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        for (int k = 0; k < n; ++k) v[k] = w[k] / norm;
    }
    return v;
}

std::vector<double> bessel_zero_scan(double alpha, int r_max) {
    std::vector<double> out;
    double x0 = 0.01, f0 = detail::bessel_j_series(alpha, x0);
    const double step = 0.01;
    while (static_cast<int>(out.size()) < r_max) {
        const double x1 = x0 + step;
        if (x1 > 60.0) throw std::runtime_error("bessel_zero_scan: scan limit reached");
        const double f1 = detail::bessel_j_series(alpha, x1);
        if (f0 * f1 < 0.0) {
            double a = x0, b = x1, fa = f0;
            while (b - a > 1e-13) {
                const double m = 0.5 * (a + b);
                const double fm = detail::bessel_j_series(alpha, m);
                if (fa * fm <= 0.0)
                    b = m;
                else {
                    a = m;
                    fa = fm;
                }
            }
            out.push_back(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
    return out;
}

}  // namespace frozen_edge::oracles
