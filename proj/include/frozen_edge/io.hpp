// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FROZEN_EDGE_IO_HPP
#define FROZEN_EDGE_IO_HPP

#include <string>

#include <json.hpp>

#include "frozen_edge/convergence.hpp"
#include "frozen_edge/frozencov.hpp"
#include "frozen_edge/sampler.hpp"

namespace frozen_edge {

/// Shortest decimal string that parses back to exactly x.
std::string format_shortest(double x);

/// Fixed 17-significant-digit form used by matrix CSV export.
std::string format_17g(double x);

/// Row-major CSV, 17 significant digits per entry.
std::string matrix_to_csv(const Matrix& m);

/// Two-column CSV (N, abs_error) of a convergence report.
std::string report_to_csv(const ConvergenceReport& rep);

nlohmann::json to_json(const Matrix& m);  // nested arrays
nlohmann::json to_json(const EnsembleParams& p);
nlohmann::json to_json(const ZeroSet& z);
nlohmann::json to_json(const LimitValue& v);
nlohmann::json to_json(const SpectralCov& cov);
nlohmann::json to_json(const ConvergenceReport& rep);
nlohmann::json to_json(const EmpiricalCLT& clt);

}  // namespace frozen_edge

#endif
