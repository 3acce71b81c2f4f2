// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#include "frozen_edge/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace frozen_edge {

std::string format_shortest(double x) {
    char buf[40];
    for (int p = 1; p <= 17; ++p) {
        std::snprintf(buf, sizeof buf, "%.*g", p, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

std::string format_17g(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string matrix_to_csv(const Matrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += format_17g(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string report_to_csv(const ConvergenceReport& rep) {
    std::string out = "N,abs_error\n";
    for (size_t i = 0; i < rep.n_grid.size(); ++i) {
        out += std::to_string(rep.n_grid[i]);
        out += ',';
        out += format_shortest(rep.abs_errors[i]);
        out += '\n';
    }
    return out;
}

nlohmann::json to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json(const EnsembleParams& p) {
    nlohmann::json j{{"family", family_name(p.family)}, {"n", p.dim_n}};
    if (p.is_jacobi()) {
        j["alpha"] = p.alpha;
        j["beta"] = p.beta;
    } else {
        j["nu"] = p.nu;
    }
    return j;
}

nlohmann::json to_json(const ZeroSet& z) {
    return {{"params", to_json(z.params)},
            {"zeros", z.zeros},
            {"polish_residuals", z.polish_residuals}};
}

static const char* kind_name(LimitKind k) {
    switch (k) {
        case LimitKind::JacobiTrig: return "jacobi-trig";
        case LimitKind::JacobiAlg: return "jacobi-algebraic";
        case LimitKind::LaguerreHard: return "laguerre-hard";
    }
    return "?";
}

nlohmann::json to_json(const LimitValue& v) {
    return {{"kind", kind_name(v.kind)},
            {"r", v.r},
            {"s", v.s},
            {"value", v.value},
            {"quad_error_estimate", v.quad_error_estimate}};
}

nlohmann::json to_json(const SpectralCov& cov) {
    return {{"params", to_json(cov.params)},
            {"eigenvalues", cov.eigenvalues},
            {"s_matrix", to_json(cov.s_matrix)},
            {"sigma_spectral", to_json(cov.sigma_spectral)},
            {"sigma_direct", to_json(cov.sigma_direct)},
            {"route_discrepancy", cov.route_discrepancy},
            {"t_orthogonality_residual", cov.t_matrix.max_orthogonality_residual}};
}

nlohmann::json to_json(const ConvergenceReport& rep) {
    return {{"params", to_json(rep.params)},
            {"r", rep.r},
            {"s", rep.s},
            {"n_grid", rep.n_grid},
            {"finite_values", rep.finite_values},
            {"limit", to_json(rep.limit)},
            {"abs_errors", rep.abs_errors},
            {"fitted_rate", rep.fitted_rate},
            {"sup_errors_stepfn", rep.sup_errors_stepfn}};
}

nlohmann::json to_json(const EmpiricalCLT& clt) {
    return {{"params", to_json(clt.params)},
            {"coupling", clt.coupling},
            {"mean", clt.mean},
            {"empirical_cov", to_json(clt.empirical_cov)},
            {"reference_cov", to_json(clt.reference_cov)},
            {"max_entry_deviation", clt.max_entry_deviation},
            {"acceptance_rate", clt.acceptance_rate},
            {"retained", clt.retained}};
}

}  // namespace frozen_edge
