// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROZEN_EDGE_PARALLEL_HPP
#define FROZEN_EDGE_PARALLEL_HPP

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frozen_edge {

/// Thread cap for the OpenMP kernels.  FROZEN_EDGE_THREADS=k limits every
/// parallel region to k threads; unset or invalid means the OpenMP default.
/// FROZEN_EDGE_THREADS=1 forces the serial schedule, which is how the tests
/// pin down serial/parallel agreement.
inline int configured_threads() {
#ifdef _OPENMP
    static const int n = [] {
        if (const char* env = std::getenv("FROZEN_EDGE_THREADS")) {
            int k = std::atoi(env);
            if (k >= 1) return k < omp_get_max_threads() ? k : omp_get_max_threads();
        }
        return omp_get_max_threads();
    }();
    return n;
#else
    return 1;
#endif
}

/// Row-parallel loop.  Each index is processed exactly once and writes only
/// its own outputs, so results are bit-identical to the serial loop.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
#ifdef _OPENMP
    if (configured_threads() > 1 && n > 1) {
        const int nt = configured_threads();
        // interleaved rows: keeps triangular row loops balanced
#pragma omp parallel for schedule(static, 1) num_threads(nt)
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
#endif
    for (int i = 0; i < n; ++i) fn(i);
}

/// Serial reference for parallel_for, kept for the agreement tests and the
/// kernel benchmark.
template <typename Fn>
void serial_for(int n, Fn&& fn) {
    for (int i = 0; i < n; ++i) fn(i);
}

}  // namespace frozen_edge

#endif
