// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#include "frozen_edge/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "frozen_edge/frozencov.hpp"

namespace frozen_edge {

std::uint64_t CounterRng::next_u64() {
    std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double CounterRng::next_uniform() {
    // 53 random bits into (0,1); offset keeps 0 out
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::next_gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 6.283185307179586 * u2;
    cached_ = rad * std::sin(ang);
    has_cached_ = true;
    return rad * std::cos(ang);
}

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double log_density(const EnsembleParams& p, double coupling, std::span<const double> x) {
    const int n = p.dim_n;
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("log_density: point dimension mismatch");
    if (!(coupling > 0.0)) throw std::domain_error("log_density: coupling must be > 0");
    double lp = 0.0;
    switch (p.family) {
        case Family::JacobiAlgebraic: {
            for (int i = 0; i < n; ++i) {
                if (!(x[i] > -1.0 && x[i] < 1.0)) return kNegInf;
                if (i > 0 && !(x[i] > x[i - 1])) return kNegInf;
            }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) lp += coupling * std::log(x[j] - x[i]);
            const double ea = 0.5 * (p.alpha + 1.0) * coupling - 0.5;
            const double eb = 0.5 * (p.beta + 1.0) * coupling - 0.5;
            for (int i = 0; i < n; ++i)
                lp += ea * std::log(1.0 - x[i]) + eb * std::log(1.0 + x[i]);
            return lp;
        }
        case Family::JacobiTrigonometric: {
            // ordered decreasing on (0, pi/2)
            for (int i = 0; i < n; ++i) {
                if (!(x[i] > 0.0 && x[i] < 1.5707963267948966)) return kNegInf;
                if (i > 0 && !(x[i] < x[i - 1])) return kNegInf;
            }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const double d = std::cos(2.0 * x[j]) - std::cos(2.0 * x[i]);
                    if (!(d > 0.0)) return kNegInf;
                    lp += coupling * std::log(d);
                }
            for (int i = 0; i < n; ++i)
                lp += coupling * ((p.alpha + 1.0) * std::log(std::sin(x[i])) +
                                  (p.beta + 1.0) * std::log(std::cos(x[i])));
            return lp;
        }
        case Family::Laguerre: {
            for (int i = 0; i < n; ++i) {
                if (!(x[i] > 0.0)) return kNegInf;
                if (i > 0 && !(x[i] > x[i - 1])) return kNegInf;
            }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    lp += 2.0 * coupling * std::log(x[j] * x[j] - x[i] * x[i]);
            for (int i = 0; i < n; ++i)
                lp += 2.0 * p.nu * coupling * std::log(x[i]) - 0.5 * x[i] * x[i];
            return lp;
        }
    }
    return kNegInf;
}

EmpiricalCLT run_chain(const EnsembleParams& params, double coupling, const ChainConfig& cfg,
                       const SampleSink& on_sample) {
    if (cfg.n_samples < 2 || cfg.burn_in < 0 || cfg.thinning < 1 ||
        !(cfg.proposal_scale > 0.0))
        throw std::invalid_argument("run_chain: bad chain configuration");
    const int n = params.dim_n;

    SpectralCov ref = assemble(params);
    RecurrenceTable table = params.is_jacobi() ? jacobi_recurrence(params.alpha, params.beta, n)
                                               : laguerre_recurrence(params.nu, n);
    ZeroSet zeros = find_zeros(table, n);

    // center of the fluctuation variables and the x-space fluctuation scale
    std::vector<double> center(n);
    double fluct = 1.0;
    switch (params.family) {
        case Family::JacobiAlgebraic:
            center = zeros.zeros;
            fluct = 1.0 / std::sqrt(coupling);
            break;
        case Family::JacobiTrigonometric:
            // t decreasing while z increasing: t_i = arccos(z_i)/2
            for (int i = 0; i < n; ++i) center[i] = 0.5 * std::acos(zeros.zeros[i]);
            fluct = 1.0 / std::sqrt(coupling);
            break;
        case Family::Laguerre:
            for (int i = 0; i < n; ++i) center[i] = std::sqrt(2.0 * coupling * zeros.zeros[i]);
            fluct = 1.0;
            break;
    }

    // component-wise random-walk steps at the 2.4/sqrt(N) optimum for the
    // known target spread; proposal_scale multiplies this baseline
    std::vector<double> prop_std(n);
    for (int i = 0; i < n; ++i)
        prop_std[i] = cfg.proposal_scale * 2.4 / std::sqrt(static_cast<double>(n)) *
                      std::sqrt(ref.sigma_spectral(i, i));

    CounterRng rng(cfg.seed);
    std::vector<double> u(n, 0.0), x(n), u_prop(n), x_prop(n);
    auto to_x = [&](const std::vector<double>& uu, std::vector<double>& xx) {
        for (int i = 0; i < n; ++i) xx[i] = center[i] + fluct * uu[i];
    };
    to_x(u, x);
    double lp = log_density(params, coupling, x);

    std::vector<double> mean(n, 0.0);
    Matrix second(n, n);
    long long accepted = 0, proposed = 0;

    const long long total = cfg.burn_in + cfg.n_samples * cfg.thinning;
    long long retained = 0;
    for (long long step = 1; step <= total; ++step) {
        for (int i = 0; i < n; ++i) u_prop[i] = u[i] + prop_std[i] * rng.next_gaussian();
        to_x(u_prop, x_prop);
        const double lp_prop = log_density(params, coupling, x_prop);
        bool accept = false;
        if (lp_prop > kNegInf) {
            const double dl = lp_prop - lp;
            accept = dl >= 0.0 || std::log(rng.next_uniform()) < dl;
        } else {
            rng.next_uniform();  // keep the stream aligned regardless of domain hits
        }
        if (step > cfg.burn_in) ++proposed;
        if (accept) {
            u.swap(u_prop);
            lp = lp_prop;
            if (step > cfg.burn_in) ++accepted;
        }
        if (step > cfg.burn_in && (step - cfg.burn_in) % cfg.thinning == 0) {
            ++retained;
            for (int i = 0; i < n; ++i) {
                mean[i] += u[i];
                for (int j = i; j < n; ++j) second(i, j) += u[i] * u[j];
            }
            if (on_sample) {
                to_x(u, x);
                on_sample(x);
            }
        }
    }

    EmpiricalCLT out;
    out.params = params;
    out.coupling = coupling;
    out.retained = retained;
    out.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(proposed);
    out.reference_cov = ref.sigma_spectral;
    out.mean.resize(n);
    for (int i = 0; i < n; ++i) out.mean[i] = mean[i] / retained;
    out.empirical_cov = Matrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double c =
                (second(i, j) - retained * out.mean[i] * out.mean[j]) / (retained - 1.0);
            out.empirical_cov(i, j) = c;
            out.empirical_cov(j, i) = c;
        }
    double dev = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double r = out.reference_cov(i, j);
            dev = std::max(dev, std::fabs(out.empirical_cov(i, j) - r) /
                                    std::max(std::fabs(r), 0.2));
        }
    out.max_entry_deviation = dev;

    if (out.acceptance_rate < 0.05 || out.acceptance_rate > 0.7) {
        TuningError err("run_chain: acceptance rate " + std::to_string(out.acceptance_rate) +
                        " outside [0.05, 0.7]; " +
                        (out.acceptance_rate < 0.05 ? "decrease" : "increase") +
                        " proposal_scale (default 1.0 is in units of the fluctuation scale)");
        err.acceptance_rate = out.acceptance_rate;
        throw err;
    }
    return out;
}

EmpiricalCLT pool(const std::vector<EmpiricalCLT>& chains) {
    if (chains.empty()) throw std::invalid_argument("pool: no chains");
    const int n = chains.front().params.dim_n;
    EmpiricalCLT out = chains.front();
    long long total = 0;
    for (const auto& c : chains) total += c.retained;
    std::vector<double> mean(n, 0.0);
    for (const auto& c : chains)
        for (int i = 0; i < n; ++i) mean[i] += c.retained * c.mean[i];
    for (int i = 0; i < n; ++i) mean[i] /= total;
    Matrix cov(n, n);
    double acc = 0.0;
    for (const auto& c : chains) {
        const double w = static_cast<double>(c.retained) / total;
        acc += w * c.acceptance_rate;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                cov(i, j) += w * (c.empirical_cov(i, j) + c.mean[i] * c.mean[j]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cov(i, j) -= mean[i] * mean[j];
    out.mean = mean;
    out.empirical_cov = cov;
    out.acceptance_rate = acc;
    out.retained = total;
    double dev = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double r = out.reference_cov(i, j);
            dev = std::max(dev,
                           std::fabs(cov(i, j) - r) / std::max(std::fabs(r), 0.2));
        }
    out.max_entry_deviation = dev;
    return out;
}

}  // namespace frozen_edge
