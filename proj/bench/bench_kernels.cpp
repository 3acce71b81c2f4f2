// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0
//
// Times the serial reference kernels against the OpenMP ones: inverse
// covariance assembly, eigenvector-matrix construction, and the spectral
// sandwich product.  Run with FROZEN_EDGE_THREADS=k to pin the thread count.

#include <chrono>
#include <cstdio>
#include <functional>

#include "frozen_edge/dualpoly.hpp"
#include "frozen_edge/frozencov.hpp"
#include "frozen_edge/parallel.hpp"

using namespace frozen_edge;

static double time_ms(const std::function<void()>& fn, int reps) {
    fn();  // warm-up
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

int main() {
    std::printf("threads: %d\n", configured_threads());
    std::printf("%-22s %6s %12s %12s %8s\n", "kernel", "N", "serial[ms]", "omp[ms]", "speedup");
    for (int n : {100, 200, 400}) {
        EnsembleParams p = EnsembleParams::jacobi_trigonometric(0.5, 1.5, n);
        RecurrenceTable table = jacobi_recurrence(p.alpha, p.beta, n);
        ZeroSet zeros = find_zeros(table, n);
        const int reps = n <= 200 ? 10 : 3;

        double ts = time_ms([&] { kernels::inv_cov_serial(p, zeros); }, reps);
        double tp = time_ms([&] { kernels::inv_cov_parallel(p, zeros); }, reps);
        std::printf("%-22s %6d %12.3f %12.3f %7.2fx\n", "inv_cov", n, ts, tp, ts / tp);

        ts = time_ms([&] { kernels::t_matrix_serial(table, zeros); }, reps);
        tp = time_ms([&] { kernels::t_matrix_parallel(table, zeros); }, reps);
        std::printf("%-22s %6d %12.3f %12.3f %7.2fx\n", "t_matrix", n, ts, tp, ts / tp);

        Matrix t = kernels::t_matrix_serial(table, zeros);
        std::vector<double> inv_lambda(n);
        for (int k = 1; k <= n; ++k)
            inv_lambda[k - 1] = 1.0 / (2.0 * k * (2.0 * n + p.alpha + p.beta + 1.0 - k));
        ts = time_ms([&] { kernels::sandwich_serial(t, inv_lambda); }, reps);
        tp = time_ms([&] { kernels::sandwich_parallel(t, inv_lambda); }, reps);
        std::printf("%-22s %6d %12.3f %12.3f %7.2fx\n", "spectral_sandwich", n, ts, tp, ts / tp);
    }
    return 0;
}
