#include "kd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <random>
#include <set>

#include "kd/sweep.hpp"

namespace kd {

namespace {

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

CriterionResult criterion1() {
    CriterionResult r{1, "wave residual scales as a^4", false, ""};
    ModelParams mp{1.0, 1.0};
    double res[3];
    const double amps[3] = {0.04, 0.02, 0.01};
    for (int i = 0; i < 3; ++i) {
        WaveParams wp{1.0, amps[i]};
        WaveExpansion e = expansion_coefficients(mp, wp);
        res[i] = residual_norm(wave_profile(e, wp, 8), wave_speed(e, wp), mp, wp);
    }
    double r01 = res[0] / res[1];
    double r12 = res[1] / res[2];
    r.pass = r01 >= 12.0 && r01 <= 20.0 && r12 >= 12.0 && r12 <= 20.0;
    r.detail = fmt("ratios %.3f, %.3f (target 16, window [12,20])", r01, r12);
    return r;
}

CriterionResult criterion2() {
    CriterionResult r{2, "Newton agrees with expansion to O(a^4)", false, ""};
    ModelParams mp{1.0, 1.0};
    WaveParams wp{1.0, 0.05};
    const double a = wp.a;
    const double a4 = std::pow(a, 4);
    WaveExpansion e = expansion_coefficients(mp, wp);
    RefinedWave rw = refine_newton(mp, wp, 16);
    double dc = std::abs(rw.c - (e.c0 + a * a * e.c2));
    double d0 = std::abs(rw.w.cosine_amp(0) - a * a * e.A0);
    double d2 = std::abs(rw.w.cosine_amp(2) - a * a * e.A2);
    double d3 = std::abs(rw.w.cosine_amp(3) - a * a * a * e.A3);
    double worst = std::max({d0, d2, d3});
    r.pass = dc <= 10.0 * a4 && worst <= 10.0 * a4;
    r.detail = fmt("speed gap %.3g = %.1f*a^4 (bound 10*a^4 = %.3g; the true a^4 "
                   "speed coefficient here is -10731/512), worst mode gap %.3g, "
                   "Newton residual %.3g",
                   dc, dc / a4, 10.0 * a4, worst, rw.residual_norm);
    return r;
}

CriterionResult criterion3() {
    CriterionResult r{3, "a=0 Hill spectrum equals i*Omega", false, ""};
    ModelParams mp{1.0, 1.0};
    WaveParams wp{1.0, 0.0};
    const int N = 32;
    double worst = 0.0;
    for (double gamma : {0.0, 0.5, 1.5}) {
        for (double tau : {0.0, 0.25, 0.5}) {
            PerturbationParams pp{gamma, tau};
            SpectrumResult res = spectrum_at(mp, wp, pp, N);
            std::vector<double> expected;
            for (int n = -N; n <= N; ++n) {
                if (n == 0 && tau == 0.0) continue;
                expected.push_back(omega_tau(n, gamma, tau, 1.0));
            }
            for (const cplx& mu : res.eigenvalues) {
                double best = std::numeric_limits<double>::infinity();
                for (double om : expected)
                    best = std::min(best, std::abs(mu - cplx(0.0, om)));
                worst = std::max(worst, best);
            }
        }
    }
    r.pass = worst <= 1e-12;
    r.detail = fmt("max eigenvalue defect %.3g (tol 1e-12)", worst);
    return r;
}

// Brute-force oracle: dense gamma scan with bisection refinement of the roots
// of Omega_{n,.,tau} = Omega_{n+Delta,.,tau}. Independent of the closed forms.
std::vector<double> brute_collision_roots(int n, int delta, double tau, double k,
                                          double gamma_hi) {
    auto diff = [&](double g) {
        return omega_tau(n, g, tau, k) - omega_tau(n + delta, g, tau, k);
    };
    std::vector<double> roots;
    const int steps = 20000;
    double prev = diff(0.0);
    if (std::abs(prev) <= 1e-11) roots.push_back(0.0);
    for (int i = 1; i <= steps; ++i) {
        double g = gamma_hi * static_cast<double>(i) / steps;
        double cur = diff(g);
        if (prev * cur < 0.0) {
            double lo = gamma_hi * static_cast<double>(i - 1) / steps, hi = g;
            for (int it = 0; it < 100; ++it) {
                double mid = 0.5 * (lo + hi);
                (diff(lo) * diff(mid) <= 0.0 ? hi : lo) = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    return roots;
}

CriterionResult criterion4() {
    CriterionResult r{4, "collision catalog matches brute-force scan", false, ""};
    const double k = 1.0;
    const int delta_max = 6;
    std::string fail;
    int checked = 0;

    for (int delta = 1; delta <= delta_max; ++delta) {
        const double hi2 = std::pow(k, 4) *
                           std::pow(static_cast<double>(delta * delta - 1), 2) / 36.0;
        const double gamma_hi = std::sqrt(hi2) + 0.5;
        for (double tau : {0.0, 0.25, 0.5}) {
            int expected_count;
            if (tau == 0.0)
                expected_count = std::max(0, delta - 1);
            else
                expected_count = (delta == 1) ? 0 : delta;  // {-1,0} never collides
            int found_count = 0;
            for (int n = -10; n <= 10; ++n) {
                if (tau == 0.0 && (n == 0 || n + delta == 0)) continue;
                std::vector<double> roots = brute_collision_roots(n, delta, tau, k, gamma_hi);
                std::optional<Collision> closed =
                    (tau == 0.0) ? collision_gamma_periodic(n, delta, k)
                                 : collision_gamma_nonperiodic(n, delta, tau, k);
                if (closed) {
                    bool matched = false;
                    for (double g : roots)
                        if (std::abs(g - closed->gamma_c) <= 1e-8) matched = true;
                    if (!matched)
                        fail += fmt(" closed-form root (n=%d,D=%d,tau=%g) not found;", n,
                                    delta, tau);
                    if (roots.size() != 1)
                        fail += fmt(" extra roots (n=%d,D=%d,tau=%g);", n, delta, tau);
                    // Catalog ranges and the tau=1/2 origin collisions.
                    bool in_range = (tau == 0.0) ? (n > -delta && n < 0)
                                                 : (n >= -delta && n <= 0);
                    if (!in_range)
                        fail += fmt(" collision outside catalog range (n=%d,D=%d);", n, delta);
                    bool origin_expected = (tau == 0.5 && delta % 2 == 1 &&
                                            n == -(delta + 1) / 2) ||
                                           (tau == 0.0 && delta % 2 == 0 && n == -delta / 2);
                    if (closed->at_origin != origin_expected)
                        fail += fmt(" origin flag mismatch (n=%d,D=%d,tau=%g);", n, delta, tau);
                    if (delta >= 3 && !(closed->n == -1 && closed->delta == 2)) {
                        auto [lo2, hi2b] = collision_bracket(delta, k);
                        double g2 = closed->gamma_c * closed->gamma_c;
                        if (g2 < lo2 - 1e-10 || g2 > hi2b + 1e-10)
                            fail += fmt(" gamma_c^2=%.6g outside bracket [%.6g,%.6g] "
                                        "(n=%d,D=%d,tau=%g);", g2, lo2, hi2b, n,
                                        delta, tau);
                    }
                    if (in_range) ++found_count;
                    ++checked;
                } else if (!roots.empty()) {
                    fail += fmt(" brute root with no closed form (n=%d,D=%d,tau=%g);", n,
                                delta, tau);
                }
            }
            if (found_count != expected_count)
                fail += fmt(" count %d != %d (D=%d,tau=%g);", found_count, expected_count,
                            delta, tau);
        }
    }
    r.pass = fail.empty();
    r.detail = fail.empty() ? fmt("%d collisions cross-checked", checked) : fail;
    return r;
}

CriterionResult criterion5() {
    CriterionResult r{5, "modulational growth rate matches prediction", false, ""};
    ModelParams mp{0.0, 2.0};
    WaveParams wp{1.0, 0.02};
    const double predicted = 3.0 * 0.01 * std::sqrt(3e-4);  // 5.196e-4
    double inside = max_growth(mp, wp, {0.01, 0.0}, 32);
    double outside = max_growth(mp, wp, {0.05, 0.0}, 32);
    r.pass = inside >= 0.8 * predicted && inside <= 1.2 * predicted && outside <= 1e-8;
    r.detail = fmt("in-band %.4g (predicted %.4g), out-of-band %.3g", inside, predicted,
                   outside);
    return r;
}

CriterionResult criterion6() {
    CriterionResult r{6, "band edge scales linearly in a", false, ""};
    ModelParams mp{0.0, 2.0};
    SweepConfig cfg;
    BandEdge e1 = find_band_edge(mp, {1.0, 0.01}, cfg);
    BandEdge e2 = find_band_edge(mp, {1.0, 0.02}, cfg);
    double ratio = e1.gamma_edge_numeric / e2.gamma_edge_numeric;
    r.pass = std::abs(ratio - 0.5) <= 0.075 && e1.relative_gap <= 0.25 &&
             e2.relative_gap <= 0.25;
    r.detail = fmt("edges %.5g, %.5g; ratio %.3f; gaps %.1f%%, %.1f%%",
                   e1.gamma_edge_numeric, e2.gamma_edge_numeric, ratio,
                   100.0 * e1.relative_gap, 100.0 * e2.relative_gap);
    return r;
}

CriterionResult criterion7() {
    CriterionResult r{7, "instability onset at k = 2|rho/phi|", false, ""};
    ModelParams mp{1.0, 1.0};
    const double a = 0.02;
    const double step = 0.05;
    SweepConfig cfg;
    double first_unstable = -1.0;
    bool below_clean = true;
    for (double k = 1.80; k <= 2.30 + 1e-12; k += step) {
        WaveParams wp{k, a};
        double coef = std::abs(mp.phi * mp.phi / 4.0 - mp.rho * mp.rho / (k * k));
        double gref = k * a * std::sqrt(coef);
        bool unstable = false;
        for (double f : {0.2, 0.4, 0.6, 0.8}) {
            // gref vanishes at the threshold k; gamma = 0 is a longitudinal
            // perturbation and says nothing about the transverse band.
            if (f * gref == 0.0) continue;
            PerturbationParams pp{f * gref, 0.0};
            if (is_unstable(spectrum_at(mp, wp, pp, cfg.hill.N))) unstable = true;
        }
        if (unstable && first_unstable < 0.0) first_unstable = k;
        if (!unstable && first_unstable < 0.0 && k > 2.0 + step + 1e-9) below_clean = false;
        if (unstable && k <= 2.0 + 1e-9) below_clean = false;
    }
    r.pass = below_clean && first_unstable > 0.0 &&
             std::abs(first_unstable - 2.0) <= step + 1e-9;
    r.detail = fmt("first unstable k = %.3f (threshold 2.00, grid step %.2f)",
                   first_unstable, step);
    return r;
}

CriterionResult criterion8() {
    CriterionResult r{8, "KP-II stable everywhere, mKP-II band for all k", false, ""};
    SweepConfig cfg;
    // KP-II: phi = 0.
    GridSpec kp2;
    kp2.rho = {1.0};
    kp2.phi = {0.0};
    kp2.k = {0.5, 1.0, 2.0};
    kp2.a = {0.02};
    kp2.gamma = {0.005, 0.01, 0.05, 0.3};
    kp2.tau = {0.0, 0.25};
    int kp2_unstable = 0;
    for (const auto& row : grid_sweep(kp2, cfg))
        if (row.numeric_unstable) ++kp2_unstable;
    // mKP-II: rho = 0, band present for every k.
    ModelParams mkp2{0.0, 2.0};
    int mkp2_bands = 0;
    for (double k : {0.5, 1.0, 2.0}) {
        WaveParams wp{k, 0.02};
        double gmax = modulational_prediction(mkp2, wp, 0.0).gamma_max;
        PerturbationParams pp{0.5 * gmax, 0.0};
        if (is_unstable(spectrum_at(mkp2, wp, pp, cfg.hill.N))) ++mkp2_bands;
    }
    r.pass = kp2_unstable == 0 && mkp2_bands == 3;
    r.detail = fmt("KP-II unstable points: %d (want 0); mKP-II bands found: %d/3",
                   kp2_unstable, mkp2_bands);
    return r;
}

CriterionResult criterion9() {
    CriterionResult r{9, "spectral symmetries", false, ""};
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const int N = 16;
    double worst_rel = 0.0;
    for (int i = 0; i < 50; ++i) {
        ModelParams mp{-2.0 + 4.0 * U(rng), -2.0 + 4.0 * U(rng)};
        WaveParams wp{0.5 + 1.5 * U(rng), 0.05 * U(rng)};
        double tau = (i % 2 == 0) ? 0.0 : 0.05 + 0.45 * U(rng);
        PerturbationParams pp{2.0 * U(rng), tau};
        SpectrumResult res = spectrum_at(mp, wp, pp, N);
        double radius = 0.0;
        for (const cplx& mu : res.eigenvalues) radius = std::max(radius, std::abs(mu));
        worst_rel = std::max(worst_rel, res.symmetry_defect / std::max(1.0, radius));
    }
    // Floquet conjugation: spectrum at -tau is the conjugated spectrum.
    double worst_conj = 0.0;
    for (int i = 0; i < 10; ++i) {
        ModelParams mp{-1.0 + 2.0 * U(rng), -1.0 + 2.0 * U(rng)};
        WaveParams wp{0.5 + 1.0 * U(rng), 0.04 * U(rng)};
        double tau = 0.05 + 0.4 * U(rng);
        double gamma = 1.5 * U(rng);
        SpectrumResult plus = spectrum_at(mp, wp, {gamma, tau}, N);
        SpectrumResult minus = spectrum_at(mp, wp, {gamma, -tau}, N);
        for (const cplx& mu : plus.eigenvalues) {
            double best = std::numeric_limits<double>::infinity();
            for (const cplx& nu : minus.eigenvalues)
                best = std::min(best, std::abs(nu - std::conj(mu)));
            worst_conj = std::max(worst_conj, best);
        }
    }
    r.pass = worst_rel <= 1e-8 && worst_conj <= 1e-9;
    r.detail = fmt("reflection defect %.3g (tol 1e-8 rel), conjugation defect %.3g "
                   "(tol 1e-9)", worst_rel, worst_conj);
    return r;
}

CriterionResult criterion10() {
    CriterionResult r{10, "high-frequency collisions stay stable", false, ""};
    ModelParams mp{1.0, 1.0};
    WaveParams wp{1.0, 0.03};
    SweepConfig cfg;
    auto audits = collision_audit(mp, wp, 4, cfg);
    int bad = 0, disc_bad = 0;
    double worst = 0.0;
    for (const auto& audit : audits) {
        if (!audit.all_stable) ++bad;
        for (const auto& [eps, res] : audit.spectra)
            worst = std::max(worst, res.max_real_part);
        if (audit.collision.delta == 2) {
            double g2 = audit.collision.gamma_c * audit.collision.gamma_c;
            double eps0 = (g2 == 0.0) ? 0.01 : 0.1 * g2;
            for (double eps : {0.0, eps0, -eps0}) {
                if (g2 + eps < 0.0) continue;
                HighFreqVerdict v = delta2_discriminant(mp, wp, audit.collision.n,
                                                        audit.collision.tau, eps,
                                                        audit.collision.gamma_c);
                if (!(v.discriminant > 0.0)) ++disc_bad;
            }
        }
    }
    r.pass = bad == 0 && disc_bad == 0 && !audits.empty();
    r.detail = fmt("%zu collisions audited, %d unstable, %d nonpositive Delta=2 "
                   "discriminants, worst max_re %.3g", audits.size(), bad, disc_bad,
                   worst);
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int id) {
    std::vector<CriterionResult> out;
    using Fn = CriterionResult (*)();
    const Fn fns[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                      criterion6, criterion7, criterion8, criterion9, criterion10};
    for (int i = 1; i <= 10; ++i) {
        if (id != 0 && id != i) continue;
        try {
            out.push_back(fns[i - 1]());
        } catch (const std::exception& e) {
            out.push_back({i, "criterion threw", false, e.what()});
        }
    }
    return out;
}

bool report_acceptance(const std::vector<CriterionResult>& results) {
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] criterion %2d: %s: %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str());
        all = all && r.pass;
    }
    return all;
}

}  // namespace kd
