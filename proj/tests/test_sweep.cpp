#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "kd/sweep.hpp"

using namespace kd;

namespace {

SweepConfig fast_config() {
    SweepConfig cfg;
    cfg.hill.N = 24;
    return cfg;
}

}  // namespace

TEST_CASE("classify_point") {
    SweepConfig cfg = fast_config();
    SUBCASE("modulational point agrees with the eigensolve") {
        StabilityVerdict v = classify_point({0.0, 2.0}, {1.0, 0.02}, {0.01, 0.0}, cfg);
        CHECK(v.analytic == AnalyticVerdict::ModulationallyUnstable);
        CHECK(v.numeric_unstable);
        CHECK(v.agree);
        CHECK(v.status == "ok");
        CHECK(v.N_used == 24);
    }
    SUBCASE("stable point outside the band") {
        StabilityVerdict v = classify_point({0.0, 2.0}, {1.0, 0.02}, {0.05, 0.0}, cfg);
        CHECK(v.analytic == AnalyticVerdict::HighFrequencyStable);
        CHECK_FALSE(v.numeric_unstable);
        CHECK(v.agree);
    }
    SUBCASE("indeterminate points always agree (abstention)") {
        StabilityVerdict v = classify_point({0.0, 2.0}, {1.0, 0.02}, {0.0199, 0.0}, cfg);
        CHECK(v.analytic == AnalyticVerdict::Indeterminate);
        CHECK(v.agree);
    }
    SUBCASE("errors are captured in status, not thrown") {
        StabilityVerdict v = classify_point({1.0, 1.0}, {-1.0, 0.02}, {0.1, 0.0}, cfg);
        CHECK(v.status.rfind("error", 0) == 0);
        CHECK_FALSE(v.agree);
    }
}

TEST_CASE("find_band_edge") {
    SUBCASE("recovers the analytic edge for a small mKP-II wave") {
        SweepConfig cfg = fast_config();
        BandEdge e = find_band_edge({0.0, 2.0}, {1.0, 0.02}, cfg);
        CHECK(e.gamma_edge_analytic == doctest::Approx(0.02));
        CHECK(e.relative_gap <= 0.25);
        CHECK(e.gamma_edge_numeric > 0.0);
    }
    SUBCASE("throws NoBracket when no instability exists") {
        CHECK_THROWS_AS(find_band_edge({1.0, 0.0}, {1.0, 0.02}, fast_config()),
                        NoBracket);
    }
}

TEST_CASE("collision_audit at a = 0 reproduces the collisions") {
    SweepConfig cfg = fast_config();
    auto audits = collision_audit({1.0, 1.0}, {1.0, 0.0}, 3, cfg);
    CHECK(!audits.empty());
    for (const auto& au : audits) {
        CHECK(au.all_stable);
        REQUIRE(!au.spectra.empty());
        // At epsilon = 0 and zero amplitude, the colliding pair is exactly
        // degenerate: two eigenvalues at i*omega within tolerance.
        for (const auto& [eps, res] : au.spectra) {
            if (eps != 0.0) continue;
            int close = 0;
            for (const cplx& mu : res.eigenvalues)
                if (std::abs(mu - cplx(0.0, au.collision.omega)) <= 1e-6) ++close;
            CHECK(close >= 2);
        }
    }
}

TEST_CASE("grid sweep") {
    GridSpec grid;
    grid.rho = {0.0, 1.0};
    grid.phi = {0.0, 2.0};
    grid.k = {1.0};
    grid.a = {0.0, 0.02};
    grid.gamma = {0.01, 0.5};
    grid.tau = {0.0, 0.25};
    SweepConfig cfg = fast_config();

    auto serial = grid_sweep_serial(grid, cfg);
    REQUIRE(serial.size() == 32);

    SUBCASE("parallel output is byte-identical to serial") {
        auto parallel = grid_sweep(grid, cfg);
        CHECK(verdicts_to_csv(parallel) == verdicts_to_csv(serial));
    }
    SUBCASE("row order follows the nested parameter loops") {
        CHECK(serial[0].mp.rho == 0.0);
        CHECK(serial[0].pp.tau == 0.0);
        CHECK(serial[1].pp.tau == 0.25);
        CHECK(serial.back().mp.rho == 1.0);
        CHECK(serial.back().pp.gamma == 0.5);
    }
    SUBCASE("csv shape") {
        std::string csv = verdicts_to_csv(serial);
        CHECK(csv.rfind("rho,phi,k,a,gamma,tau,analytic,max_re,numeric_unstable,"
                        "agree,N,status\n", 0) == 0);
        std::size_t lines = 0;
        for (char ch : csv)
            if (ch == '\n') ++lines;
        CHECK(lines == serial.size() + 1);
    }
}

TEST_CASE("effective_workers respects the env cap") {
    SweepConfig cfg;
    cfg.num_workers = 8;
    setenv("KD_NUM_WORKERS", "2", 1);
    CHECK(effective_workers(cfg) == 2);
    unsetenv("KD_NUM_WORKERS");
    CHECK(effective_workers(cfg) == 8);
}
