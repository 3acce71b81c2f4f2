// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROZEN_EDGE_SAMPLER_HPP
#define FROZEN_EDGE_SAMPLER_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "frozen_edge/ensemble.hpp"
#include "frozen_edge/linalg.hpp"

namespace frozen_edge {

/// Deterministic counter-based generator: output i is SplitMix64 applied to
/// seed + i * golden-gamma (Steele, Lea, Flood 2014).  Streams never collide
/// for distinct seeds in practice and the sequence is reproducible per build.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}
    std::uint64_t next_u64();
    double next_uniform();       // (0,1)
    double next_gaussian();      // standard normal, Box-Muller
  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

struct ChainConfig {
    long long n_samples = 1'000'000;  // retained samples
    long long burn_in = 100'000;      // steps discarded up front
    int thinning = 10;                // keep every thinning-th step
    double proposal_scale = 1.0;      // in units of the fluctuation scale
    std::uint64_t seed = 1;
};

/// Unnormalized log density of the finite-coupling ensemble at an ordered
/// point (normalization constants omitted; Metropolis only needs ratios).
/// Returns -infinity outside the open ordered domain, including ties.
///   JacobiAlgebraic, coupling kappa, x in (-1,1)^N ordered increasing:
///     kappa sum_{i<j} log(x_j-x_i)
///     + sum_i ((a+1)kappa/2 - 1/2) log(1-x_i) + ((b+1)kappa/2 - 1/2) log(1+x_i)
///   JacobiTrigonometric, t in (0,pi/2)^N ordered decreasing:
///     kappa [ sum_{i<j} log(cos 2t_j - cos 2t_i)
///             + sum_i (a+1) log sin t_i + (b+1) log cos t_i ]
///   Laguerre, coupling beta, x in (0,inf)^N ordered increasing:
///     2 beta sum_{i<j} log(x_j^2-x_i^2) + sum_i (2 nu beta log x_i - x_i^2/2)
double log_density(const EnsembleParams& params, double coupling, std::span<const double> point);

/// Thrown when the realized acceptance rate leaves [0.05, 0.7]; the message
/// says which way to move proposal_scale.
struct TuningError : std::runtime_error {
    using std::runtime_error::runtime_error;
    double acceptance_rate = 0.0;
};

struct EmpiricalCLT {
    EnsembleParams params;
    double coupling = 0.0;
    std::vector<double> mean;   // of the centered, scaled fluctuations
    Matrix empirical_cov;
    Matrix reference_cov;       // Sigma_N from the frozen covariance module
    double max_entry_deviation = 0.0;  // max |emp-ref| / max(|ref|, 0.2)
    double acceptance_rate = 0.0;
    long long retained = 0;
};

/// Random-walk Metropolis on the fluctuation variables
///   u = sqrt(kappa) (x - z_N)            (Jacobi, algebraic)
///   u = sqrt(kappa) (t - arccos(z_N)/2)  (Jacobi, trigonometric)
///   u = x - sqrt(2 beta) r               (Laguerre, r_i = sqrt(z_i)),
/// proposing independent Gaussian moves of all coordinates with standard
/// deviation proposal_scale * 2.4/sqrt(N) * sqrt(Sigma_ii) in u (so the
/// original-coordinate step stays proportional to coupling^(-1/2) where the
/// fluctuations shrink with the coupling).  The empirical covariance of u is
/// compared entrywise against Sigma_N; max_entry_deviation normalizes each
/// entry gap by max(|Sigma_ij|, 0.2).
///
/// on_sample, when set, receives every retained sample in the original
/// coordinates (CSV streaming, constraint checks in tests).
using SampleSink = std::function<void(std::span<const double>)>;
EmpiricalCLT run_chain(const EnsembleParams& params, double coupling, const ChainConfig& config,
                       const SampleSink& on_sample = {});

/// Pool covariances of independent chains (weighted by retained counts);
/// sequential and associative.
EmpiricalCLT pool(const std::vector<EmpiricalCLT>& chains);

}  // namespace frozen_edge

#endif
