// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#include "frozen_edge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace frozen_edge {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

double max_abs(const Matrix& m) {
    double r = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r = std::max(r, std::fabs(m(i, j)));
    return r;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    double r = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r = std::max(r, std::fabs(a(i, j) - b(i, j)));
    return r;
}

double max_symmetry_defect(const Matrix& m) {
    double r = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j) r = std::max(r, std::fabs(m(i, j) - m(j, i)));
    return r;
}

// Negative-eigenvalue count of (T - x I) from the Sturm sequence; monotone in x.
static int sturm_count(std::span<const double> d, std::span<const double> e, double x) {
    const int n = static_cast<int>(d.size());
    int count = 0;
    double q = d[0] - x;
    if (q < 0.0) ++count;
    for (int i = 1; i < n; ++i) {
        double denom = q;
        if (denom == 0.0) denom = kEps * (std::fabs(e[i]) + kEps);
        q = d[i] - x - e[i] * e[i] / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

double tridiag_eigenvalue_bisect(std::span<const double> d, std::span<const double> e, int k) {
    const int n = static_cast<int>(d.size());
    // Gershgorin bounds
    double lo = d[0], hi = d[0];
    for (int i = 0; i < n; ++i) {
        double r = (i > 0 ? std::fabs(e[i]) : 0.0) + (i + 1 < n ? std::fabs(e[i + 1]) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    for (int it = 0; it < 200 && hi - lo > 4.0 * kEps * (std::fabs(lo) + std::fabs(hi)) + 1e-300; ++it) {
        double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    if (hi - lo > 16.0 * kEps * (std::fabs(lo) + std::fabs(hi)) + 1e-280)
        throw std::runtime_error("tridiagonal bisection failed to converge");
    return 0.5 * (lo + hi);
}

std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> e, int max_sweeps) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return {};
    if (n == 1) return d;
    const std::vector<double> d0 = d, e0 = e;
    // shift off-diagonals down one slot, NR convention
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    bool ql_failed = false;
    for (int l = 0; l < n && !ql_failed; ++l) {
        int iter = 0, m = 0;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= kEps * dd) break;
            }
            if (m != l) {
                if (iter++ == max_sweeps) {
                    ql_failed = true;
                    break;
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    if (ql_failed) {
        // Sturm bisection fallback: slower but unconditionally convergent.
        std::vector<double> out(n);
        for (int k = 0; k < n; ++k) out[k] = tridiag_eigenvalue_bisect(d0, e0, k);
        return out;
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> symmetric_eigenvalues(const Matrix& a) {
    // Householder reduction to tridiagonal form (values only), then QL.
    const int n = a.rows();
    Matrix w = a;
    std::vector<double> d(n, 0.0), e(n, 0.0);
    for (int i = n - 1; i > 0; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::fabs(w(i, k));
            if (scale == 0.0) {
                e[i] = w(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    w(i, k) /= scale;
                    h += w(i, k) * w(i, k);
                }
                double f = w(i, l);
                double g = (f >= 0.0 ? -std::sqrt(h) : std::sqrt(h));
                e[i] = scale * g;
                h -= f * g;
                w(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += w(j, k) * w(i, k);
                    for (int k = j + 1; k <= l; ++k) g += w(k, j) * w(i, k);
                    e[j] = g / h;
                    f += e[j] * w(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = w(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) w(j, k) -= f * e[k] + g * w(i, k);
                }
            }
        } else {
            e[i] = w(i, l);
        }
        d[i] = h;
    }
    for (int i = 0; i < n; ++i) d[i] = w(i, i);
    return tridiag_eigenvalues(std::move(d), std::move(e));
}

Matrix cholesky(const Matrix& a) {
    const int n = a.rows();
    Matrix l(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (s <= 0.0)
                    throw std::runtime_error("cholesky: matrix not positive definite at pivot " +
                                             std::to_string(i));
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return l;
}

std::vector<double> cholesky_solve(const Matrix& l, std::span<const double> b) {
    const int n = l.rows();
    std::vector<double> y(n), x(n);
    for (int i = 0; i < n; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k) s -= l(i, k) * y[k];
        y[i] = s / l(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k < n; ++k) s -= l(k, i) * x[k];
        x[i] = s / l(i, i);
    }
    return x;
}

Matrix spd_inverse(const Matrix& a) {
    const int n = a.rows();
    Matrix l = cholesky(a);
    Matrix inv(n, n);
    std::vector<double> e(n, 0.0);
    for (int j = 0; j < n; ++j) {
        e[j] = 1.0;
        std::vector<double> col = cholesky_solve(l, e);
        e[j] = 0.0;
        for (int i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    // symmetrize; the two triangles differ only by solve rounding
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = 0.5 * (inv(i, j) + inv(j, i));
            inv(i, j) = inv(j, i) = v;
        }
    return inv;
}

double pairwise_sum(std::span<const double> v) {
    const size_t n = v.size();
    if (n <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const size_t h = n / 2;
    return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 3)
        throw std::invalid_argument("loglog_slope: need >= 3 matching points");
    const int n = static_cast<int>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("loglog_slope: data must be positive");
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace frozen_edge
