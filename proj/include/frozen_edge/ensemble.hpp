// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROZEN_EDGE_ENSEMBLE_HPP
#define FROZEN_EDGE_ENSEMBLE_HPP

#include <stdexcept>
#include <string>

namespace frozen_edge {

/// Which frozen ensemble a computation refers to.  The two Jacobi kinds share
/// the same polynomial zeros; they differ in the coordinates in which the
/// central limit theorem is stated (algebraic x vs. trigonometric t with
/// x = cos 2t), and hence in their covariance matrices.
enum class Family { JacobiAlgebraic, JacobiTrigonometric, Laguerre };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::JacobiAlgebraic: return "jacobi-algebraic";
        case Family::JacobiTrigonometric: return "jacobi-trigonometric";
        case Family::Laguerre: return "laguerre";
    }
    return "?";
}

/// Ensemble identity: family, its real parameters and the dimension N.
/// Jacobi requires alpha, beta > -1; Laguerre requires nu > 0.  Use the
/// factory functions, which validate and throw std::domain_error otherwise.
struct EnsembleParams {
    Family family = Family::JacobiAlgebraic;
    double alpha = 0.0;  // Jacobi only
    double beta = 0.0;   // Jacobi only
    double nu = 0.0;     // Laguerre only
    int dim_n = 1;

    bool is_jacobi() const { return family != Family::Laguerre; }

    static EnsembleParams jacobi_algebraic(double alpha, double beta, int n) {
        return make_jacobi(Family::JacobiAlgebraic, alpha, beta, n);
    }
    static EnsembleParams jacobi_trigonometric(double alpha, double beta, int n) {
        return make_jacobi(Family::JacobiTrigonometric, alpha, beta, n);
    }
    static EnsembleParams laguerre(double nu, int n) {
        require(nu > 0.0, "laguerre parameter nu must be > 0, got " + std::to_string(nu));
        require(n >= 1, "dimension N must be >= 1");
        EnsembleParams p;
        p.family = Family::Laguerre;
        p.nu = nu;
        p.dim_n = n;
        return p;
    }

  private:
    static void require(bool ok, const std::string& what) {
        if (!ok) throw std::domain_error(what);
    }
    static EnsembleParams make_jacobi(Family f, double alpha, double beta, int n) {
        require(alpha > -1.0, "jacobi parameter alpha must be > -1, got " + std::to_string(alpha));
        require(beta > -1.0, "jacobi parameter beta must be > -1, got " + std::to_string(beta));
        require(n >= 1, "dimension N must be >= 1");
        EnsembleParams p;
        p.family = f;
        p.alpha = alpha;
        p.beta = beta;
        p.dim_n = n;
        return p;
    }
};

}  // namespace frozen_edge

#endif
