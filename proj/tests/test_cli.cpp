// Copyright (c) 2026 the frozen-edge authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command-line binary: flag handling, exit-code
// contract, output schemas (frozen by the golden files under tests/golden).

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string g_binary;
std::string g_golden_dir;

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = g_binary + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// recursive structural comparison: same keys/shape, numbers within tolerance
void check_same_shape(const json& got, const json& want, double tol) {
    REQUIRE(got.type() == want.type());
    if (want.is_object()) {
        for (auto it = want.begin(); it != want.end(); ++it) {
            INFO("key ", it.key());
            REQUIRE(got.contains(it.key()));
            check_same_shape(got.at(it.key()), it.value(), tol);
        }
        CHECK(got.size() == want.size());
    } else if (want.is_array()) {
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < want.size(); ++i) check_same_shape(got[i], want[i], tol);
    } else if (want.is_number_float() || want.is_number_integer()) {
        const double g = got.get<double>(), w = want.get<double>();
        CHECK(std::fabs(g - w) <= tol * std::max(1.0, std::fabs(w)));
    } else {
        CHECK(got == want);
    }
}

}  // namespace

TEST_CASE("zeros: Legendre N=2 CSV matches the golden file") {
    RunResult r = run("zeros --family jacobi --alpha 0 --beta 0 --n 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("-0.5773502691896257") != std::string::npos);
    CHECK(r.output.find("0.5773502691896257") != std::string::npos);

    std::ifstream golden(g_golden_dir + "/zeros_legendre_n2.csv");
    REQUIRE(golden.good());
    std::stringstream want;
    want << golden.rdbuf();
    // header must match exactly; numeric rows to high accuracy
    std::istringstream got_s(r.output), want_s(want.str());
    std::string got_line, want_line;
    std::getline(got_s, got_line);
    std::getline(want_s, want_line);
    CHECK(got_line == want_line);
    while (std::getline(want_s, want_line)) {
        REQUIRE(std::getline(got_s, got_line));
        std::string ga, wa;
        std::istringstream gl(got_line), wl(want_line);
        while (std::getline(wl, wa, ',')) {
            REQUIRE(std::getline(gl, ga, ','));
            CHECK(std::fabs(std::strtod(ga.c_str(), nullptr) - std::strtod(wa.c_str(), nullptr)) <=
                  1e-12);
        }
    }
}

TEST_CASE("zeros: Laguerre closed-form values") {
    RunResult r = run("zeros --family laguerre --nu 1 --n 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0.585786437626905") != std::string::npos);
    CHECK(r.output.find("3.414213562373095") != std::string::npos);
}

TEST_CASE("zeros: JSON schema") {
    RunResult r = run("zeros --family laguerre --nu 1 --n 3");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    for (const char* key : {"params", "zeros", "polish_residuals", "metadata"})
        CHECK(doc.contains(key));
    CHECK(doc["zeros"].size() == 3);
    CHECK(doc["params"]["nu"].get<double>() == 1.0);
}

TEST_CASE("zeros: hard-edge deviation report") {
    RunResult r = run("zeros --family laguerre --nu 1 --n 100 --hard-edge 1");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    REQUIRE(doc.contains("hard_edge"));
    // z_{1,100} sits within 1e-5 of j^2/(4N+2nu)
    CHECK(doc["hard_edge"]["refined_deviation"][0].get<double>() < 1e-5);
    CHECK(doc["hard_edge"]["bessel_zeros"][0].get<double>() ==
          doctest::Approx(2.404825557695773).epsilon(1e-12));
}

TEST_CASE("exit-code contract") {
    SUBCASE("domain error is exit 2 with a diagnostic") {
        RunResult r = run("zeros --family jacobi --alpha -2 --beta 0 --n 2");
        CHECK(r.exit_code == 2);
        CHECK(r.output.find("alpha") != std::string::npos);
    }
    SUBCASE("unknown flag is exit 1") {
        RunResult r = run("zeros --family jacobi --alpha 0 --beta 0 --n 2 --frobnicate");
        CHECK(r.exit_code == 1);
    }
    SUBCASE("missing subcommand is exit 1") {
        RunResult r = run("");
        CHECK(r.exit_code == 1);
    }
    SUBCASE("laguerre nu=0 is exit 2") {
        RunResult r = run("zeros --family laguerre --nu 0 --n 2");
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("cov: N=1 closed forms and schema golden") {
    RunResult r = run("cov --family jacobi-trigonometric --alpha 0 --beta 0 --n 1");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["sigma_spectral"][0][0].get<double>() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(doc["sigma_direct"][0][0].get<double>() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(doc["eigenvalues"][0].get<double>() == doctest::Approx(4.0).epsilon(1e-14));

    std::ifstream golden(g_golden_dir + "/cov_trig_n1.json");
    REQUIRE(golden.good());
    json want = json::parse(golden);
    check_same_shape(doc, want, 1e-9);

    RunResult rl = run("cov --family laguerre --nu 1 --n 1");
    CHECK(rl.exit_code == 0);
    json dl = json::parse(rl.output);
    CHECK(dl["sigma_spectral"][0][0].get<double>() == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("cov: route discrepancy stays tiny at N=20") {
    RunResult r = run("cov --family jacobi --alpha 0 --beta 0 --n 20");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["route_discrepancy"].get<double>() <= 1e-9);
    CHECK(doc["t_orthogonality_residual"].get<double>() <= 1e-8);
}

TEST_CASE("cov: csv matrix export is row-major with 17 significant digits") {
    RunResult r = run("cov --family jacobi-trigonometric --alpha 0 --beta 0 --n 2 --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream s(r.output);
    std::string line;
    int rows = 0;
    while (std::getline(s, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("limit: ratio, gram, and cross-check") {
    SUBCASE("algebraic/trig ratio equals 1/(4 j_r j_s)") {
        RunResult r = run("limit --kind ratio --alpha 0 --r 1 --s 2");
        CHECK(r.exit_code == 0);
        json doc = json::parse(r.output);
        CHECK(doc["ratio"].get<double>() ==
              doctest::Approx(doc["expected"].get<double>()).epsilon(1e-12));
    }
    SUBCASE("gram identity exits 0") {
        RunResult r = run("limit --kind gram --alpha 0 --rmax 4");
        CHECK(r.exit_code == 0);
        json doc = json::parse(r.output);
        CHECK(doc["max_identity_defect"].get<double>() <= 1e-8);
    }
    SUBCASE("cross-quadrature agreement exits 0") {
        RunResult r = run("limit --kind trig --alpha 0.5 --r 1 --s 1 --cross-check --tol 1e-9");
        CHECK(r.exit_code == 0);
        json doc = json::parse(r.output);
        CHECK(doc["cross_check_gap"].get<double>() <= 1e-9);
    }
    SUBCASE("laguerre kind uses order nu-1") {
        RunResult r = run("limit --kind laguerre --nu 1 --r 1 --s 1");
        CHECK(r.exit_code == 0);
        json doc = json::parse(r.output);
        CHECK(doc["order"].get<double>() == doctest::Approx(0.0));
        CHECK(doc["value"].get<double>() == doctest::Approx(0.6994518224282614).epsilon(1e-9));
    }
}

TEST_CASE("converge: trig succeeds, algebraic trips the monotonicity gate") {
    RunResult r =
        run("converge --family jacobi-trigonometric --alpha 0 --beta 0 --r 1 --s 1 "
            "--grid 25 --grid 50 --grid 100");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["fitted_rate"].get<double>() <= -0.8);
    CHECK(doc["errors_monotone"].get<bool>());

    // the unscaled algebraic entries drift toward zero, away from the
    // tabulated constant, so the error sequence is not monotone decreasing
    RunResult ra =
        run("converge --family jacobi-algebraic --alpha 0 --beta 0 --r 1 --s 1 "
            "--grid 25 --grid 50 --grid 100");
    CHECK(ra.exit_code == 3);
}

TEST_CASE("sample: reproducible under fixed seed, tuning error is exit 4") {
    const std::string args =
        "sample --family jacobi --alpha 0 --beta 0 --n 1 --coupling 10000 "
        "--samples 20000 --burn-in 2000 --seed 7";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    json da = json::parse(a.output), db = json::parse(b.output);
    CHECK(da["empirical_cov"] == db["empirical_cov"]);
    CHECK(da["acceptance_rate"] == db["acceptance_rate"]);
    for (const char* key : {"params", "coupling", "mean", "empirical_cov", "reference_cov",
                            "max_entry_deviation", "acceptance_rate", "retained", "config",
                            "metadata"})
        CHECK(da.contains(key));

    RunResult bad = run(args + " --scale 80");
    CHECK(bad.exit_code == 4);
    CHECK(bad.output.find("proposal_scale") != std::string::npos);
}

TEST_CASE("sample: raw retained samples stream to CSV") {
    const std::string path = "/tmp/frozen_edge_test_samples.csv";
    std::remove(path.c_str());
    RunResult r = run("sample --family laguerre --nu 1 --n 2 --coupling 10000 --samples 500 "
                      "--burn-in 500 --seed 3 --stream-samples " + path);
    CHECK(r.exit_code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string line;
    int rows = 0;
    bool ordered = true;
    while (std::getline(f, line)) {
        ++rows;
        double x0, x1;
        char comma;
        std::istringstream(line) >> x0 >> comma >> x1;
        if (!(0.0 < x0 && x0 < x1)) ordered = false;
    }
    CHECK(rows == 500);
    CHECK(ordered);
    std::remove(path.c_str());
}

TEST_CASE("thread cap environment variable is honored") {
    RunResult r = run("cov --family jacobi --alpha 0 --beta 0 --n 1");
    json doc = json::parse(r.output);
    // test harness sets no cap here; just check the field is reported >= 1
    CHECK(doc["metadata"]["threads"].get<int>() >= 1);
    const std::string capped = "FROZEN_EDGE_THREADS=1 " + g_binary +
                               " cov --family jacobi --alpha 0 --beta 0 --n 1 2>&1";
    FILE* pipe = popen(capped.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(json::parse(out)["metadata"]["threads"].get<int>() == 1);
}

int main(int argc, char** argv) {
    // the harness passes the binary path as the first non-flag argument
    std::vector<char*> rest;
    rest.push_back(argv[0]);
    for (int i = 1; i < argc; ++i) {
        if (g_binary.empty() && argv[i][0] != '-')
            g_binary = argv[i];
        else
            rest.push_back(argv[i]);
    }
    if (g_binary.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-frozen_edge-binary>\n");
        return 1;
    }
    if (const char* dir = std::getenv("FROZEN_EDGE_GOLDEN_DIR")) g_golden_dir = dir;
    doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
    return ctx.run();
}
