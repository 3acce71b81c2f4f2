// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#include "frozen_edge/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "frozen_edge/parallel.hpp"
#include "frozen_edge/quadrature.hpp"

namespace frozen_edge {

namespace {

constexpr double kBranchSwitch = 12.0;

// ---- double-double helpers (error-free transformations) ----------------

struct dd {
    double hi = 0.0, lo = 0.0;
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {  // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = dd_add(a, dd_mul({-q1, 0.0}, b));
    double q2 = r.hi / b.hi;
    dd r2 = dd_add(r, dd_mul({-q2, 0.0}, b));
    double q3 = r2.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return dd_add(q, {q3, 0.0});
}

// ---- power-series branch ------------------------------------------------

// J_a(z) = (z/2)^a / Gamma(a+1) * sum_m (-1)^m (z^2/4)^m / (m! (a+1)_m).
// The sum cancels heavily for z near the branch switch (terms reach ~1e4
// while the result is O(0.1)), so the term recurrence and accumulation run
// in double-double; the smooth prefactor is plain double.
double series_impl(double alpha, double z) {
    if (z == 0.0) {
        if (alpha == 0.0) return 1.0;
        return alpha > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    const dd q = two_prod(0.5 * z, 0.5 * z);  // z^2/4
    dd term{1.0, 0.0};
    dd sum{1.0, 0.0};
    double max_mag = 1.0;
    for (int m = 1; m <= 500; ++m) {
        term = dd_mul(term, q);
        term = dd_div(term, two_sum(alpha, static_cast<double>(m)));
        term = dd_div(term, {static_cast<double>(m), 0.0});
        term.hi = -term.hi;
        term.lo = -term.lo;
        sum = dd_add(sum, term);
        max_mag = std::max(max_mag, std::fabs(term.hi));
        if (std::fabs(term.hi) < 1e-35 * max_mag) break;
    }
    const double prefactor = std::pow(0.5 * z, alpha) / std::tgamma(alpha + 1.0);
    return prefactor * (sum.hi + sum.lo);
}

// ---- Steed's method (continued fractions CF1 + CF2) ---------------------

// J_nu and J'_nu for nu >= 0, x >= 2.  CF1 gives J'/J and the sign of J,
// CF2 gives (J'+iY')/(J+iY) at the reduced order, and the Wronskian
// J Y' - J' Y = 2/(pi x) fixes the normalization.
void steed_jy(double x, double nu, double& rj, double& rjp) {
    constexpr int kMaxIt = 10000;
    constexpr double kEps = 1e-16;
    constexpr double kFpMin = 1e-300;
    const double xi = 1.0 / x, xi2 = 2.0 * xi;
    const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
    const double xmu = nu - nl;

    // CF1: h = J'_nu / J_nu, isign tracks the sign of J_nu
    double h = nu * xi;
    if (h < kFpMin) h = kFpMin;
    double b = xi2 * nu, c = h, d = 0.0;
    int isign = 1;
    bool ok = false;
    for (int i = 1; i <= kMaxIt; ++i) {
        b += xi2;
        d = b - d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = b - 1.0 / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = c * d;
        h *= del;
        if (d < 0.0) isign = -isign;
        if (std::fabs(del - 1.0) < kEps) {
            ok = true;
            break;
        }
    }
    if (!ok) throw std::runtime_error("bessel: CF1 failed to converge");

    // downward recurrence from nu to xmu (nl steps; usually zero here)
    double rjl = isign * kFpMin, rjpl = h * rjl;
    const double rjl1 = rjl, rjp1 = rjpl;
    double fact = nu * xi;
    for (int l = nl; l >= 1; --l) {
        const double rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if (rjl == 0.0) rjl = kEps;
    const double f = rjpl / rjl;  // J'_mu / J_mu

    // CF2 at order xmu
    double a = 0.25 - xmu * xmu;
    double p = -0.5 * xi, q = 1.0;
    double br = 2.0 * x, bi = 2.0;
    fact = a * xi / (p * p + q * q);
    double cr = br + q * fact, ci = bi + p * fact;
    double den = br * br + bi * bi;
    double dr = br / den, di = -bi / den;
    double dlr = cr * dr - ci * di, dli = cr * di + ci * dr;
    double temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    ok = false;
    for (int i = 2; i <= kMaxIt; ++i) {
        a += 2 * (i - 1);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if (std::fabs(dr) + std::fabs(di) < kFpMin) dr = kFpMin;
        fact = a / (cr * cr + ci * ci);
        cr = br + cr * fact;
        ci = bi - ci * fact;
        if (std::fabs(cr) + std::fabs(ci) < kFpMin) cr = kFpMin;
        den = dr * dr + di * di;
        dr /= den;
        di = -di / den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (std::fabs(dlr - 1.0) + std::fabs(dli) < kEps) {
            ok = true;
            break;
        }
    }
    if (!ok) throw std::runtime_error("bessel: CF2 failed to converge");

    const double w = 2.0 / (3.141592653589793 * x);  // Wronskian
    const double gam = (p - f) / q;
    double rjmu = std::sqrt(w / ((p - f) * gam + q));
    rjmu = std::copysign(rjmu, rjl);
    // scale the recurrence output to the normalized value at xmu
    fact = rjmu / rjl;
    rj = rjl1 * fact;
    rjp = rjp1 * fact;
}

double steed_impl(double alpha, double x) {
    if (alpha >= 0.0) {
        double j, jp;
        steed_jy(x, alpha, j, jp);
        return j;
    }
    // alpha in (-1,0): one exact ladder step down from alpha+1
    double j1, jp1;
    steed_jy(x, alpha + 1.0, j1, jp1);
    return (alpha + 1.0) / x * j1 + jp1;
}

void check_domain(double alpha, double z) {
    if (!(alpha > -1.0))
        throw std::domain_error("bessel_j: order must be > -1, got " + std::to_string(alpha));
    if (z < 0.0) throw std::domain_error("bessel_j: argument must be >= 0");
}

}  // namespace

namespace detail {
double bessel_j_series(double alpha, double z) {
    check_domain(alpha, z);
    return series_impl(alpha, z);
}
double bessel_j_steed(double alpha, double z) {
    check_domain(alpha, z);
    return steed_impl(alpha, z);
}
}  // namespace detail

double bessel_j(double alpha, double z) {
    check_domain(alpha, z);
    return z < kBranchSwitch ? series_impl(alpha, z) : steed_impl(alpha, z);
}

double bessel_j_prime(double alpha, double z) {
    check_domain(alpha, z);
    if (!(z > 0.0)) throw std::domain_error("bessel_j_prime: argument must be > 0");
    if (alpha == 0.0) return -bessel_j(1.0, z);
    if (alpha < 0.0) return alpha / z * bessel_j(alpha, z) - bessel_j(alpha + 1.0, z);
    return 0.5 * (bessel_j(alpha - 1.0, z) - bessel_j(alpha + 1.0, z));
}

BesselZeroTable bessel_zeros(double alpha, int r_max) {
    check_domain(alpha, 0.0);
    if (r_max < 1) throw std::invalid_argument("bessel_zeros: r_max must be >= 1");
    BesselZeroTable t;
    t.alpha = alpha;
    t.zeros.reserve(r_max);
    t.derivs.reserve(r_max);
    const double step = 0.19634954084936207;  // pi/16, well under the zero spacing
    // Rayleigh's sum gives j_{a,1} > 2 sqrt(a+1), so this start never skips
    // the first zero even for orders close to -1
    double x = std::min(0.05, std::sqrt(alpha + 1.0));
    double fx = bessel_j(alpha, x);
    for (int r = 1; r <= r_max; ++r) {
        // bracket by sign scan
        const double scan_limit = x + 3.141592653589793 * (2.0 + alpha) + 12.0;
        double a = x, fa = fx, bpt = 0.0, fb = 0.0;
        bool bracketed = false;
        while (a < scan_limit) {
            bpt = a + step;
            fb = bessel_j(alpha, bpt);
            if (fa * fb < 0.0) {
                bracketed = true;
                break;
            }
            a = bpt;
            fa = fb;
        }
        if (!bracketed)
            throw std::runtime_error("bessel_zeros: failed to bracket zero r=" + std::to_string(r));
        // a few bisection steps to the middle of the basin, then Newton
        for (int it = 0; it < 10; ++it) {
            const double m = 0.5 * (a + bpt);
            const double fm = bessel_j(alpha, m);
            if (fa * fm <= 0.0) {
                bpt = m;
                fb = fm;
            } else {
                a = m;
                fa = fm;
            }
        }
        double zr = 0.5 * (a + bpt);
        double best_x = zr, best_f = std::numeric_limits<double>::infinity();
        bool settled = false;
        for (int it = 0; it < 30; ++it) {
            const double f = bessel_j(alpha, zr);
            if (std::fabs(f) < best_f) {
                best_f = std::fabs(f);
                best_x = zr;
            }
            const double fp = bessel_j_prime(alpha, zr);
            const double next = zr - f / fp;
            if (!(next > a - step && next < bpt + step))
                throw std::runtime_error("bessel_zeros: Newton left the bracket at r=" +
                                         std::to_string(r));
            if (std::fabs(next - zr) <= 4.0 * std::numeric_limits<double>::epsilon() * zr) {
                zr = next;
                settled = true;
                break;
            }
            zr = next;
        }
        if (!settled) {
            // step stuck at the evaluation noise floor; the best-residual
            // point is the zero to working precision
            if (best_f <= 1e-11) zr = best_x;
            else throw std::runtime_error("bessel_zeros: Newton failed to settle");
        }
        t.zeros.push_back(zr);
        t.derivs.push_back(bessel_j_prime(alpha, zr));
        x = zr + 0.3;
        fx = bessel_j(alpha, x);
    }
    return t;
}

static void check_order(const BesselZeroTable& t, int r, const char* who) {
    if (r < 1 || r > static_cast<int>(t.zeros.size()))
        throw std::invalid_argument(std::string(who) + ": zero table too short for r=" +
                                    std::to_string(r));
}

double limit_fn_jacobi(const BesselZeroTable& t, int r, double y) {
    check_order(t, r, "limit_fn_jacobi");
    const double j = t.zeros[r - 1];
    return -std::sqrt(2.0) / t.derivs[r - 1] * std::sqrt(1.0 - y) * bessel_j(t.alpha, j * (1.0 - y));
}

double limit_fn_laguerre(const BesselZeroTable& t, int r, double y) {
    check_order(t, r, "limit_fn_laguerre");
    const double j = t.zeros[r - 1];
    return -bessel_j(t.alpha, j * std::sqrt(1.0 - y)) / t.derivs[r - 1];
}

namespace {

// I(j_r, j_s) = int_0^1 y/(1-y^2) J_a(j_r y) J_a(j_s y) dy.  The integrand
// vanishes like (1-y) at the upper end and like y^(1+2a) at the lower one.
QuadResult trig_core_integral(const BesselZeroTable& t, int r, int s) {
    const double jr = t.zeros[r - 1], js = t.zeros[s - 1];
    const double a = t.alpha;
    auto f = [&](double y) {
        return y / (1.0 - y * y) * bessel_j(a, jr * y) * bessel_j(a, js * y);
    };
    return integrate_graded_01(f, 1.0 + 2.0 * a, jr + js);
}

}  // namespace

LimitValue limit_cov(LimitKind kind, const BesselZeroTable& table, int r, int s) {
    check_order(table, r, "limit_cov");
    check_order(table, s, "limit_cov");
    // evaluate on the sorted pair so the (r,s) symmetry is bit-exact
    QuadResult q = trig_core_integral(table, std::min(r, s), std::max(r, s));
    const double dprod = table.derivs[r - 1] * table.derivs[s - 1];
    LimitValue v;
    v.kind = kind;
    v.r = r;
    v.s = s;
    v.value = q.value / dprod;
    v.quad_error_estimate = q.error_estimate / std::fabs(dprod);
    if (kind == LimitKind::JacobiAlg) {
        const double scale = 4.0 * table.zeros[r - 1] * table.zeros[s - 1];
        v.value /= scale;
        v.quad_error_estimate /= scale;
    }
    return v;
}

Matrix limit_orthonormality(const BesselZeroTable& table, int r_max) {
    if (r_max < 1 || r_max > static_cast<int>(table.zeros.size()))
        throw std::invalid_argument("limit_orthonormality: r_max exceeds the zero table");
    Matrix g(r_max, r_max);
    // independent (r,s) pairs, upper triangle
    std::vector<std::pair<int, int>> pairs;
    for (int r = 1; r <= r_max; ++r)
        for (int s = r; s <= r_max; ++s) pairs.emplace_back(r, s);
    const double a = table.alpha;
    parallel_for(static_cast<int>(pairs.size()), [&](int idx) {
        auto [r, s] = pairs[idx];
        const double jr = table.zeros[r - 1], js = table.zeros[s - 1];
        auto f = [&](double u) { return u * bessel_j(a, jr * u) * bessel_j(a, js * u); };
        QuadResult q = integrate_graded_01(f, 1.0 + 2.0 * a, jr + js);
        const double val = 2.0 * q.value / (table.derivs[r - 1] * table.derivs[s - 1]);
        g(r - 1, s - 1) = val;
        g(s - 1, r - 1) = val;
    });
    return g;
}

}  // namespace frozen_edge
