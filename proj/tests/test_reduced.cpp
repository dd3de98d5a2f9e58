#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "kd/reduced.hpp"

using namespace kd;

TEST_CASE("modulational matrix") {
    SUBCASE("zero at a = gamma = 0") {
        auto m = modulational_matrix({1.0, 1.0}, {1.0, 0.0}, 0.0);
        CHECK(m[0][1] == 0.0);
        CHECK(m[1][0] == 0.0);
    }
    SUBCASE("rho=0, phi=2, k=1, a=0.1, gamma=0.05") {
        auto m = modulational_matrix({0.0, 2.0}, {1.0, 0.1}, 0.05);
        CHECK(m[0][1] == doctest::Approx(0.0225));
        CHECK(m[1][0] == doctest::Approx(0.0075));
    }
    SUBCASE("trace is zero always") {
        std::mt19937 rng(2);
        std::uniform_real_distribution<double> U(-1.0, 1.0);
        for (int i = 0; i < 10; ++i) {
            auto m = modulational_matrix({U(rng), U(rng)}, {0.5 + std::abs(U(rng)), 0.1 * U(rng)},
                                         0.2 * U(rng));
            CHECK(m[0][0] + m[1][1] == 0.0);
        }
    }
    SUBCASE("eigenvalues equal the closed form +-(3|g|/k) sqrt(Lambda)") {
        std::mt19937 rng(4);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        for (int i = 0; i < 20; ++i) {
            ModelParams mp{-1.0 + 2.0 * U(rng), -1.0 + 2.0 * U(rng)};
            WaveParams wp{0.5 + 1.5 * U(rng), 0.05 * U(rng)};
            double gamma = 0.05 * U(rng);
            auto m = modulational_matrix(mp, wp, gamma);
            Eigen::Matrix2d M;
            M << m[0][0], m[0][1], m[1][0], m[1][1];
            Eigen::EigenSolver<Eigen::Matrix2d> es(M);
            ModulationalPrediction p = modulational_prediction(mp, wp, gamma);
            std::complex<double> closed = p.mu_plus;
            double best0 = std::min(std::abs(es.eigenvalues()(0) - closed),
                                    std::abs(es.eigenvalues()(0) + closed));
            double best1 = std::min(std::abs(es.eigenvalues()(1) - closed),
                                    std::abs(es.eigenvalues()(1) + closed));
            CHECK(best0 <= 1e-12);
            CHECK(best1 <= 1e-12);
        }
    }
}

TEST_CASE("modulational prediction") {
    SUBCASE("rho=0, phi=2, k=1, a=0.02, gamma=0.01") {
        ModulationalPrediction p = modulational_prediction({0.0, 2.0}, {1.0, 0.02}, 0.01);
        CHECK(p.Lambda == doctest::Approx(3e-4));
        CHECK(p.mu_plus.real() == doctest::Approx(3.0 * 0.01 * std::sqrt(3e-4)));
        CHECK(p.mu_plus.imag() == 0.0);
        CHECK(p.unstable);
        CHECK(p.gamma_max == doctest::Approx(0.02));
        REQUIRE(p.k_threshold.has_value());
        CHECK(*p.k_threshold == 0.0);
    }
    SUBCASE("phi=0 is never modulationally unstable") {
        for (double g : {0.001, 0.01, 0.1}) {
            ModulationalPrediction p = modulational_prediction({1.0, 0.0}, {1.0, 0.02}, g);
            CHECK(p.Lambda < 0.0);
            CHECK_FALSE(p.unstable);
            CHECK_FALSE(p.k_threshold.has_value());  // infinite threshold sentinel
        }
    }
    SUBCASE("double zero at gamma = a = 0") {
        ModulationalPrediction p = modulational_prediction({1.0, 1.0}, {1.0, 0.0}, 0.0);
        CHECK(p.Lambda == 0.0);
        CHECK(p.mu_plus == std::complex<double>(0.0));
    }
    SUBCASE("Lambda is even in gamma and a") {
        std::mt19937 rng(9);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        for (int i = 0; i < 10; ++i) {
            ModelParams mp{U(rng), U(rng)};
            double a = 0.05 * U(rng), g = 0.05 * U(rng), k = 0.5 + U(rng);
            double L = modulational_prediction(mp, {k, a}, g).Lambda;
            CHECK(modulational_prediction(mp, {k, -a}, g).Lambda == L);
            CHECK(modulational_prediction(mp, {k, a}, -g).Lambda == L);
        }
    }
    SUBCASE("band edge is linear in |a|; equals k|a||phi|/2 for rho=0") {
        ModelParams mp{0.0, 1.6};
        double g1 = modulational_prediction(mp, {1.3, 0.01}, 0.0).gamma_max;
        double g2 = modulational_prediction(mp, {1.3, 0.02}, 0.0).gamma_max;
        CHECK(g2 == doctest::Approx(2.0 * g1).epsilon(1e-13));
        CHECK(g1 == doctest::Approx(1.3 * 0.01 * 0.8).epsilon(1e-13));
    }
}

TEST_CASE("Delta=2 discriminant") {
    SUBCASE("degenerate epsilon = a = 0 point is a flagged boundary") {
        HighFreqVerdict v = delta2_discriminant({1.0, 1.0}, {1.0, 0.0}, -1, 0.5, 0.0,
                                                std::sqrt(3.0) / 4.0);
        CHECK(v.discriminant == 0.0);
        CHECK(v.boundary);
        CHECK(v.stable);
    }
    SUBCASE("rho=0 kills the A2 term; discriminant positive") {
        HighFreqVerdict v = delta2_discriminant({0.0, 1.0}, {1.0, 0.05}, -1, 0.5, 0.0,
                                                std::sqrt(3.0) / 4.0);
        double a4 = std::pow(0.05, 4);
        CHECK(v.discriminant == doctest::Approx(9.0 * a4 * 0.25 / 16.0));
        CHECK(v.stable);
    }
    SUBCASE("positive on a randomized admissible sweep") {
        std::mt19937 rng(21);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        for (int i = 0; i < 200; ++i) {
            ModelParams mp{-2.0 + 4.0 * U(rng), -2.0 + 4.0 * U(rng)};
            WaveParams wp{1.0, 0.05 * U(rng)};
            double tau = 0.05 + 0.45 * U(rng);
            int n = -1;  // the {-1,1} colliding pair
            auto c = collision_gamma_nonperiodic(n, 2, tau, wp.k);
            REQUIRE(c.has_value());
            double eps = (-1.0 + 2.0 * U(rng)) * 1e-3;
            HighFreqVerdict v = delta2_discriminant(mp, wp, n, tau, eps, c->gamma_c);
            CHECK(v.discriminant >= 0.0);
            if (wp.a != 0.0 || eps != 0.0) CHECK(v.stable);
        }
    }
    SUBCASE("rejects inputs outside the collision regime") {
        CHECK_THROWS_AS(delta2_discriminant({1.0, 1.0}, {1.0, 0.01}, 1, 0.25, 0.0, 1.0),
                        std::invalid_argument);
    }
}

TEST_CASE("Delta>=3 discriminant structure") {
    CHECK(highfreq_delta_ge3_structure(1.0, -1, 3, 0.0, 0.0, 0.7, 0.0) == 0.0);
    CHECK(highfreq_delta_ge3_structure(1.0, -1, 3, 0.0, 0.01, 0.0, 0.0) ==
          doctest::Approx(2.025e-3));
    SUBCASE("always nonnegative") {
        std::mt19937 rng(17);
        std::uniform_real_distribution<double> U(-1.0, 1.0);
        for (int i = 0; i < 50; ++i) {
            double v = highfreq_delta_ge3_structure(0.5 + std::abs(U(rng)), -2, 3,
                                                    0.4 * U(rng), 1e-2 * U(rng),
                                                    U(rng), 0.05 * U(rng));
            CHECK(v >= 0.0);
        }
    }
    CHECK_THROWS_AS(highfreq_delta_ge3_structure(1.0, -1, 2, 0.0, 0.0, 0.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("analytic classification") {
    CHECK(classify_analytic({0.0, 2.0}, {1.0, 0.02}, {0.01, 0.0}) ==
          AnalyticVerdict::ModulationallyUnstable);
    CHECK(classify_analytic({1.0, 0.0}, {1.0, 0.02}, {0.5, 0.25}) ==
          AnalyticVerdict::HighFrequencyStable);
    SUBCASE("phi=0 never modulationally unstable on a sweep") {
        for (double g : {0.001, 0.01, 0.1, 1.0})
            CHECK(classify_analytic({1.0, 0.0}, {1.0, 0.02}, {g, 0.0}) !=
                  AnalyticVerdict::ModulationallyUnstable);
    }
    SUBCASE("mKP-II threshold is zero: every k qualifies") {
        for (double k : {0.5, 1.0, 2.0}) {
            auto p = modulational_prediction({0.0, 1.0}, {k, 0.02}, 0.0);
            REQUIRE(p.k_threshold.has_value());
            CHECK(*p.k_threshold == 0.0);
        }
    }
    SUBCASE("near-edge points abstain") {
        ModelParams mp{0.0, 2.0};
        WaveParams wp{1.0, 0.02};  // gamma_max = 0.02
        CHECK(classify_analytic(mp, wp, {0.0199, 0.0}) == AnalyticVerdict::Indeterminate);
        CHECK(classify_analytic(mp, wp, {0.0215, 0.0}) == AnalyticVerdict::Indeterminate);
        CHECK(classify_analytic(mp, wp, {0.03, 0.0}) ==
              AnalyticVerdict::HighFrequencyStable);
    }
}
