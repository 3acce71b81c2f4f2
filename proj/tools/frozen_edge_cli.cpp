// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0
//
// frozen_edge: covariance matrices of frozen Jacobi and Laguerre ensembles,
// their Bessel hard-edge limits, convergence diagnostics, and a Metropolis
// validation sampler.
//
// Exit codes: 0 success, 1 usage error, 2 parameter domain error,
// 3 numerical check failed, 4 sampler tuning error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frozen_edge/bessel.hpp"
#include "frozen_edge/convergence.hpp"
#include "frozen_edge/frozencov.hpp"
#include "frozen_edge/io.hpp"
#include "frozen_edge/orthopoly.hpp"
#include "frozen_edge/parallel.hpp"
#include "frozen_edge/quadrature.hpp"
#include "frozen_edge/sampler.hpp"

namespace fe = frozen_edge;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitTuning = 4;

struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    std::string family = "jacobi";
    double alpha = 0.0, beta = 0.0, nu = 1.0;
    bool has_nu = false;
    int n = 1;
    std::string format = "json";
    std::string output;
};

void add_family_flags(CLI::App* cmd, CommonOpts& o, bool with_n = true) {
    cmd->add_option("--family", o.family,
                    "jacobi | jacobi-algebraic | jacobi-trigonometric | laguerre")
        ->default_val(o.family);
    cmd->add_option("--alpha", o.alpha, "Jacobi alpha (> -1)");
    cmd->add_option("--beta", o.beta, "Jacobi beta (> -1)");
    cmd->add_option("--nu", o.nu, "Laguerre nu (> 0)")->each([&o](const std::string&) {
        o.has_nu = true;
    });
    if (with_n) cmd->add_option("--n", o.n, "dimension N")->required();
}

void add_io_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", o.output, "output path (default: stdout)");
}

fe::EnsembleParams resolve_params(const CommonOpts& o) {
    if (o.family == "laguerre") return fe::EnsembleParams::laguerre(o.nu, o.n);
    if (o.family == "jacobi" || o.family == "jacobi-algebraic")
        return fe::EnsembleParams::jacobi_algebraic(o.alpha, o.beta, o.n);
    if (o.family == "jacobi-trigonometric" || o.family == "jacobi-trig")
        return fe::EnsembleParams::jacobi_trigonometric(o.alpha, o.beta, o.n);
    throw CLI::ValidationError("--family", "unknown family '" + o.family + "'");
}

void write_out(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << content;
}

json metadata(const std::string& subcommand) {
    return {{"tool", "frozen_edge"},
            {"subcommand", subcommand},
            {"threads", fe::configured_threads()},
            {"defaults",
             {{"n_grid", fe::kDefaultNGrid},
              {"sup_norm_y_max", fe::kSupNormYMax},
              {"quadrature", {{"abs_tol", 1e-10}, {"rel_tol", 1e-9}, {"max_refinements", 20}}},
              {"chain", {{"n_samples", 1000000}, {"burn_in", 100000}, {"thinning", 10},
                         {"proposal_scale", 1.0}}}}}};
}

void emit(const json& doc, const std::string& csv, const CommonOpts& o) {
    if (o.format == "json")
        write_out(doc.dump(2), o.output);
    else
        write_out(csv, o.output);
}

// ---- zeros ---------------------------------------------------------------

int cmd_zeros(const CommonOpts& o, int hard_edge_rmax) {
    fe::EnsembleParams p = resolve_params(o);
    fe::RecurrenceTable t = p.is_jacobi() ? fe::jacobi_recurrence(p.alpha, p.beta, p.dim_n)
                                          : fe::laguerre_recurrence(p.nu, p.dim_n);
    fe::ZeroSet z = fe::find_zeros(t, p.dim_n);
    z.params.family = p.family;

    json doc = fe::to_json(z);
    doc["metadata"] = metadata("zeros");
    if (hard_edge_rmax > 0) {
        // deviations of the edge zeros from their Bessel-zero predictions
        const double order = p.is_jacobi() ? p.alpha : p.nu - 1.0;
        fe::BesselZeroTable bt = fe::bessel_zeros(order, hard_edge_rmax);
        doc["hard_edge"] = {
            {"bessel_zeros", bt.zeros},
            {"leading_order_deviation",
             fe::hard_edge_zero_check(z, bt.zeros, hard_edge_rmax,
                                      fe::ZeroAsymptotics::LeadingOrder)},
            {"refined_deviation",
             fe::hard_edge_zero_check(z, bt.zeros, hard_edge_rmax, fe::ZeroAsymptotics::Refined)}};
    }
    std::string csv = "index,zero,polish_residual\n";
    for (size_t i = 0; i < z.zeros.size(); ++i)
        csv += std::to_string(i + 1) + "," + fe::format_shortest(z.zeros[i]) + "," +
               fe::format_shortest(z.polish_residuals[i]) + "\n";
    emit(doc, csv, o);
    return kExitOk;
}

// ---- cov -----------------------------------------------------------------

int cmd_cov(const CommonOpts& o, const std::string& which) {
    fe::EnsembleParams p = resolve_params(o);
    fe::SpectralCov cov = fe::assemble(p);
    json doc = fe::to_json(cov);
    doc["metadata"] = metadata("cov");
    const fe::Matrix* m = &cov.sigma_spectral;
    if (which == "sigma-direct") m = &cov.sigma_direct;
    else if (which == "s") m = &cov.s_matrix;
    else if (which == "t") m = &cov.t_matrix.entries;
    emit(doc, fe::matrix_to_csv(*m), o);
    return kExitOk;
}

// ---- limit ---------------------------------------------------------------

int cmd_limit(const CommonOpts& o, const std::string& kind, int r, int s, int rmax, double tol,
              bool cross_check) {
    const double order = o.family == "laguerre" || o.has_nu ? o.nu - 1.0 : o.alpha;
    json doc;
    doc["metadata"] = metadata("limit");
    std::string csv;
    if (kind == "gram") {
        fe::BesselZeroTable tab = fe::bessel_zeros(order, rmax);
        fe::Matrix g = fe::limit_orthonormality(tab, rmax);
        double defect = 0.0;
        for (int i = 0; i < rmax; ++i)
            for (int j = 0; j < rmax; ++j)
                defect = std::max(defect, std::fabs(g(i, j) - (i == j ? 1.0 : 0.0)));
        doc["order"] = order;
        doc["r_max"] = rmax;
        doc["gram"] = fe::to_json(g);
        doc["max_identity_defect"] = defect;
        doc["tolerance"] = tol;
        emit(doc, fe::matrix_to_csv(g), o);
        if (defect > tol)
            throw CheckFailed("gram identity defect " + fe::format_shortest(defect) +
                              " exceeds tolerance");
        return kExitOk;
    }
    fe::BesselZeroTable tab = fe::bessel_zeros(order, std::max(r, s));
    if (kind == "ratio") {
        fe::LimitValue trig = fe::limit_cov(fe::LimitKind::JacobiTrig, tab, r, s);
        fe::LimitValue alg = fe::limit_cov(fe::LimitKind::JacobiAlg, tab, r, s);
        const double ratio = alg.value / trig.value;
        const double expected = 1.0 / (4.0 * tab.zeros[r - 1] * tab.zeros[s - 1]);
        doc["order"] = order;
        doc["r"] = r;
        doc["s"] = s;
        doc["ratio"] = ratio;
        doc["expected"] = expected;
        csv = "ratio,expected\n" + fe::format_shortest(ratio) + "," +
              fe::format_shortest(expected) + "\n";
        emit(doc, csv, o);
        return kExitOk;
    }
    fe::LimitKind lk = kind == "trig"        ? fe::LimitKind::JacobiTrig
                       : kind == "algebraic" ? fe::LimitKind::JacobiAlg
                                             : fe::LimitKind::LaguerreHard;
    fe::LimitValue v = fe::limit_cov(lk, tab, r, s);
    doc.update(fe::to_json(v));
    doc["order"] = order;
    doc["bessel_zeros"] = tab.zeros;
    if (cross_check) {
        // independent tanh-sinh evaluation of the same integral
        const double jr = tab.zeros[r - 1], js = tab.zeros[s - 1];
        fe::QuadResult q = fe::integrate_tanh_sinh_01([&](double y, double omy) {
            return y / (omy * (1.0 + y)) * fe::bessel_j(order, jr * y) * fe::bessel_j(order, js * y);
        });
        double other = q.value / (tab.derivs[r - 1] * tab.derivs[s - 1]);
        if (lk == fe::LimitKind::JacobiAlg) other /= 4.0 * jr * js;
        doc["cross_check_value"] = other;
        doc["cross_check_gap"] = std::fabs(other - v.value);
        if (std::fabs(other - v.value) > std::max(tol, tol * std::fabs(v.value)))
            throw CheckFailed("cross-quadrature gap " + fe::format_shortest(other - v.value) +
                              " exceeds tolerance");
    }
    csv = "kind,r,s,value,quad_error_estimate\n" + kind + "," + std::to_string(r) + "," +
          std::to_string(s) + "," + fe::format_shortest(v.value) + "," +
          fe::format_shortest(v.quad_error_estimate) + "\n";
    emit(doc, csv, o);
    return kExitOk;
}

// ---- converge ------------------------------------------------------------

int cmd_converge(const CommonOpts& o, int r, int s, std::vector<int> grid, double mono_tol) {
    fe::EnsembleParams p = resolve_params(o);
    if (grid.empty()) grid = fe::kDefaultNGrid;
    fe::ConvergenceReport rep = fe::scaled_cov_sequence(p, r, s, grid);
    json doc = fe::to_json(rep);
    doc["metadata"] = metadata("converge");
    bool monotone = true;
    for (size_t i = 1; i < rep.abs_errors.size(); ++i)
        if (rep.abs_errors[i] > rep.abs_errors[i - 1] * (1.0 + mono_tol) + 1e-15) monotone = false;
    doc["errors_monotone"] = monotone;
    doc["mono_tol"] = mono_tol;
    emit(doc, fe::report_to_csv(rep), o);
    if (!monotone)
        throw CheckFailed("convergence errors not monotone within tolerance " +
                          fe::format_shortest(mono_tol));
    return kExitOk;
}

// ---- sample --------------------------------------------------------------

int cmd_sample(const CommonOpts& o, double coupling, fe::ChainConfig cfg,
               const std::string& stream_path) {
    fe::EnsembleParams p = resolve_params(o);
    std::ofstream stream;
    fe::SampleSink sink;
    if (!stream_path.empty()) {
        stream.open(stream_path);
        if (!stream) throw std::runtime_error("cannot open sample stream " + stream_path);
        sink = [&stream](std::span<const double> x) {
            for (size_t i = 0; i < x.size(); ++i) {
                if (i) stream << ',';
                stream << fe::format_shortest(x[i]);
            }
            stream << '\n';
        };
    }
    fe::EmpiricalCLT clt = fe::run_chain(p, coupling, cfg, sink);
    json doc = fe::to_json(clt);
    doc["config"] = {{"n_samples", cfg.n_samples},
                     {"burn_in", cfg.burn_in},
                     {"thinning", cfg.thinning},
                     {"proposal_scale", cfg.proposal_scale},
                     {"seed", cfg.seed}};
    doc["metadata"] = metadata("sample");
    emit(doc, fe::matrix_to_csv(clt.empirical_cov), o);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frozen ensemble covariances and their Bessel hard-edge limits"};
    app.require_subcommand(1);

    CommonOpts o;
    int r = 1, s = 1, rmax = 4;
    double tol = 1e-8;
    double coupling = 1e4;
    bool cross_check = false;
    std::string kind = "trig", which_matrix = "sigma";
    std::vector<int> grid;
    double mono_tol = 1e-3;
    fe::ChainConfig cfg;
    std::string stream_path;

    int hard_edge_rmax = 0;
    CLI::App* zeros = app.add_subcommand("zeros", "ordered polynomial zeros");
    add_family_flags(zeros, o);
    add_io_flags(zeros, o);
    zeros->add_option("--hard-edge", hard_edge_rmax,
                      "also report edge-zero deviations from the first r Bessel zeros");

    CLI::App* cov = app.add_subcommand("cov", "inverse covariance, spectrum, covariance routes");
    add_family_flags(cov, o);
    add_io_flags(cov, o);
    cov->add_option("--matrix", which_matrix, "csv matrix: sigma | sigma-direct | s | t")
        ->check(CLI::IsMember({"sigma", "sigma-direct", "s", "t"}));

    CLI::App* limit = app.add_subcommand("limit", "Bessel hard-edge limit values");
    add_family_flags(limit, o, false);
    add_io_flags(limit, o);
    limit->add_option("--kind", kind, "trig | algebraic | laguerre | ratio | gram")
        ->check(CLI::IsMember({"trig", "algebraic", "laguerre", "ratio", "gram"}));
    limit->add_option("--r", r, "row index r >= 1");
    limit->add_option("--s", s, "column index s >= 1");
    limit->add_option("--rmax", rmax, "Gram matrix size");
    limit->add_option("--tol", tol, "check tolerance");
    limit->add_flag("--cross-check", cross_check, "compare against tanh-sinh quadrature");

    CLI::App* converge = app.add_subcommand("converge", "finite-N convergence report");
    add_family_flags(converge, o, false);
    add_io_flags(converge, o);
    converge->add_option("--r", r);
    converge->add_option("--s", s);
    converge->add_option("--grid", grid, "N grid (default 25 50 100 200)");
    converge->add_option("--mono-tol", mono_tol,
                         "allowed relative error increase before exit 3");

    CLI::App* sample = app.add_subcommand("sample", "Metropolis CLT validation");
    add_family_flags(sample, o);
    add_io_flags(sample, o);
    sample->add_option("--coupling", coupling, "kappa (Jacobi) or beta (Laguerre)");
    sample->add_option("--samples", cfg.n_samples, "retained samples");
    sample->add_option("--burn-in", cfg.burn_in);
    sample->add_option("--thin", cfg.thinning);
    sample->add_option("--scale", cfg.proposal_scale, "proposal scale (fluctuation units)");
    sample->add_option("--seed", cfg.seed);
    sample->add_option("--stream-samples", stream_path, "CSV path for raw retained samples");

    try {
        app.parse(argc, argv);
        if (zeros->parsed()) return cmd_zeros(o, hard_edge_rmax);
        if (cov->parsed()) return cmd_cov(o, which_matrix);
        if (limit->parsed()) return cmd_limit(o, kind, r, s, rmax, tol, cross_check);
        if (converge->parsed()) return cmd_converge(o, r, s, grid, mono_tol);
        if (sample->parsed()) return cmd_sample(o, coupling, cfg, stream_path);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const fe::TuningError& e) {
        std::cerr << "tuning error: " << e.what() << "\n";
        return kExitTuning;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const CheckFailed& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
