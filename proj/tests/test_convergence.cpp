// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "frozen_edge/convergence.hpp"
#include "frozen_edge/frozencov.hpp"
#include "frozen_edge/io.hpp"

using namespace frozen_edge;

TEST_CASE("step functions") {
    SUBCASE("N = 1, r = 1 Jacobi: single sample 1") {
        StepFn f = step_fn(EnsembleParams::jacobi_algebraic(0, 0, 1), 1);
        REQUIRE(f.samples.size() == 1);
        CHECK(f.samples[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(f.value_at(0.3) == f.samples[0]);
    }
    SUBCASE("unit L2 norm (orthogonal-row scaling)") {
        for (EnsembleParams p :
             {EnsembleParams::jacobi_algebraic(0, 0, 30),
              EnsembleParams::jacobi_algebraic(0.5, 1.5, 30), EnsembleParams::laguerre(1, 30),
              EnsembleParams::laguerre(2.5, 30)}) {
            for (int r = 1; r <= 5; ++r)
                CHECK(std::fabs(step_fn(p, r).l2_norm() - 1.0) < 1e-8);
        }
    }
    SUBCASE("discrete orthonormality of step functions") {
        for (int n : {50, 200}) {
            EnsembleParams p = EnsembleParams::jacobi_algebraic(0, 0, n);
            std::vector<StepFn> fs;
            for (int r = 1; r <= 5; ++r) fs.push_back(step_fn(p, r));
            for (int r = 0; r < 5; ++r)
                for (int s = r; s < 5; ++s) {
                    double sum = 0.0;
                    for (int k = 0; k < n; ++k) sum += fs[r].samples[k] * fs[s].samples[k];
                    CHECK(std::fabs(sum / n - (r == s ? 1.0 : 0.0)) < 1e-9);
                }
        }
        EnsembleParams pl = EnsembleParams::laguerre(1, 100);
        std::vector<StepFn> fs;
        for (int r = 1; r <= 3; ++r) fs.push_back(step_fn(pl, r));
        for (int r = 0; r < 3; ++r)
            for (int s = r; s < 3; ++s) {
                double sum = 0.0;
                for (int k = 0; k < 100; ++k) sum += fs[r].samples[k] * fs[s].samples[k];
                CHECK(std::fabs(sum / 100 - (r == s ? 1.0 : 0.0)) < 1e-9);
            }
    }
    SUBCASE("r out of range") {
        CHECK_THROWS_AS(step_fn(EnsembleParams::jacobi_algebraic(0, 0, 5), 6),
                        std::invalid_argument);
        CHECK_THROWS_AS(step_fn(EnsembleParams::jacobi_algebraic(0, 0, 5), 0),
                        std::invalid_argument);
    }
}

TEST_CASE("sup-norm convergence of step functions to the Bessel profiles") {
    for (double a : {0.0, 0.5}) {
        BesselZeroTable tab = bessel_zeros(a, 3);
        for (int r = 1; r <= 3; ++r) {
            const double e50 =
                sup_deviation(step_fn(EnsembleParams::jacobi_algebraic(a, a, 50), r),
                              EnsembleParams::jacobi_algebraic(a, a, 50), tab, kSupNormYMax);
            const double e200 =
                sup_deviation(step_fn(EnsembleParams::jacobi_algebraic(a, a, 200), r),
                              EnsembleParams::jacobi_algebraic(a, a, 200), tab, kSupNormYMax);
            CHECK(e200 <= e50 / 3.0);
        }
    }
    BesselZeroTable tab = bessel_zeros(0.0, 2);  // nu = 1
    for (int r = 1; r <= 2; ++r) {
        const double e50 = sup_deviation(step_fn(EnsembleParams::laguerre(1, 50), r),
                                         EnsembleParams::laguerre(1, 50), tab, kSupNormYMax);
        const double e200 = sup_deviation(step_fn(EnsembleParams::laguerre(1, 200), r),
                                          EnsembleParams::laguerre(1, 200), tab, kSupNormYMax);
        CHECK(e200 <= e50 / 3.0);
    }
}

TEST_CASE("spectral weight h_N and its limit") {
    SUBCASE("limit handle: h(1) = 1/2") {
        HWeights h = h_weights(10, 0, 0);
        CHECK(h.limit(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("bound h_N <= min(N/2, 1/(2y)) for N = 10") {
        HWeights h = h_weights(10, 0, 0);
        for (double y = 0.0; y <= 1.0001; y += 0.001) CHECK(h.bound_holds(std::min(y, 1.0)));
        CHECK(h.value_at(1.0) == 0.5);
    }
    SUBCASE("uniform convergence on [0.1, 1] at rate 1/N") {
        std::vector<double> ns{20, 40, 80}, sups;
        for (int n : {20, 40, 80}) {
            HWeights h = h_weights(n, 0, 0);
            double sup = 0.0;
            for (double y = 0.1; y <= 1.0; y += 1e-3)
                sup = std::max(sup, std::fabs(h.value_at(y) - h.limit(y)));
            sups.push_back(sup);
        }
        CHECK(sups[1] < sups[0]);
        CHECK(sups[2] < sups[1]);
        // the sup sits at the first cell boundary where the gap is
        // h(y)/(yN+1); the +1 offset keeps the measured slope a bit above -1
        // at these N
        CHECK(loglog_slope(ns, sups) < -0.75);
    }
}

TEST_CASE("h-weighted step sum reproduces the scaled trig covariance entry") {
    for (auto [a, b] : {std::pair{0.0, 0.0}, {0.5, 1.5}}) {
        const int n = 40;
        EnsembleParams p = EnsembleParams::jacobi_trigonometric(a, b, n);
        SpectralCov cov = assemble(p);
        for (int r = 1; r <= 2; ++r)
            for (int s = r; s <= 2; ++s) {
                const double lhs = spectral_step_sum(p, r, s);
                const double rhs =
                    static_cast<double>(n) * n * cov.sigma_direct(n - r, n - s);
                CHECK(std::fabs(lhs - rhs) <= 1e-9);
            }
    }
}

TEST_CASE("scaled covariance sequences") {
    SUBCASE("trigonometric, alpha=beta=0, r=s=1: errors fall at rate ~ 1/N") {
        ConvergenceReport rep = scaled_cov_sequence(EnsembleParams::jacobi_trigonometric(0, 0, 1),
                                                    1, 1, {25, 50, 100});
        for (size_t i = 0; i + 1 < rep.abs_errors.size(); ++i)
            CHECK(rep.abs_errors[i + 1] < rep.abs_errors[i]);
        CHECK(rep.fitted_rate <= -0.8);
        for (size_t i = 0; i < rep.abs_errors.size(); ++i)
            CHECK(rep.abs_errors[i] ==
                  doctest::Approx(std::fabs(rep.finite_values[i] - rep.limit.value)).epsilon(1e-15));
    }
    SUBCASE("Laguerre, nu=1, r=s=1: errors decrease monotonically") {
        ConvergenceReport rep =
            scaled_cov_sequence(EnsembleParams::laguerre(1, 1), 1, 1, {25, 50, 100});
        for (size_t i = 0; i + 1 < rep.abs_errors.size(); ++i)
            CHECK(rep.abs_errors[i + 1] < rep.abs_errors[i]);
    }
    SUBCASE("algebraic entries scale like N^-4, so the unscaled comparison stalls") {
        // the N^4-scaled entry over 4 j_r j_s approaches the trig limit; the
        // plain entry goes to zero instead of the tabulated constant
        ConvergenceReport rep = scaled_cov_sequence(EnsembleParams::jacobi_algebraic(0, 0, 1), 1,
                                                    1, {25, 50, 100});
        CHECK(rep.fitted_rate > -0.1);  // stalls at the limit constant
        BesselZeroTable tab = bessel_zeros(0.0, 1);
        LimitValue trig = limit_cov(LimitKind::JacobiTrig, tab, 1, 1);
        for (size_t i = 0; i < rep.n_grid.size(); ++i) {
            const double n = rep.n_grid[i];
            const double rescaled =
                rep.finite_values[i] * n * n * n * n / (4.0 * tab.zeros[0] * tab.zeros[0]);
            CHECK(std::fabs(rescaled - trig.value) / trig.value < 2.5 / n);
        }
    }
    SUBCASE("error sequences are nonincreasing for all (r,s) up to (3,3)") {
        for (EnsembleParams tmpl : {EnsembleParams::jacobi_trigonometric(0, 0, 1),
                                    EnsembleParams::laguerre(1, 1)}) {
            for (int r = 1; r <= 3; ++r)
                for (int s = r; s <= 3; ++s) {
                    ConvergenceReport rep = scaled_cov_sequence(tmpl, r, s, {25, 50, 100, 200});
                    for (size_t i = 1; i < rep.abs_errors.size(); ++i)
                        CHECK(rep.abs_errors[i] <= rep.abs_errors[i - 1] * (1.0 + 1e-6));
                }
        }
    }
    SUBCASE("grid validation") {
        EnsembleParams p = EnsembleParams::jacobi_trigonometric(0, 0, 1);
        CHECK_THROWS_AS(scaled_cov_sequence(p, 1, 1, {25, 50}), std::invalid_argument);
        CHECK_THROWS_AS(scaled_cov_sequence(p, 1, 1, {25, 25, 50}), std::invalid_argument);
        CHECK_THROWS_AS(scaled_cov_sequence(p, 30, 1, {25, 50, 100}), std::invalid_argument);
    }
}

TEST_CASE("report serialization") {
    ConvergenceReport rep =
        scaled_cov_sequence(EnsembleParams::jacobi_trigonometric(0, 0, 1), 1, 1, {25, 50, 100});
    nlohmann::json j = to_json(rep);
    for (const char* key : {"params", "r", "s", "n_grid", "finite_values", "limit", "abs_errors",
                            "fitted_rate", "sup_errors_stepfn"})
        CHECK(j.contains(key));
    std::string csv = report_to_csv(rep);
    CHECK(csv.rfind("N,abs_error\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
