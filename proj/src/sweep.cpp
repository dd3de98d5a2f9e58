#include "kd/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifdef KD_HAVE_OPENMP
#include <omp.h>
#endif

namespace kd {

int effective_workers(const SweepConfig& cfg) {
    int n = cfg.num_workers;
#ifdef KD_HAVE_OPENMP
    if (n <= 0) n = omp_get_max_threads();
#else
    if (n <= 0) n = 1;
#endif
    if (const char* env = std::getenv("KD_NUM_WORKERS")) {
        int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return std::max(1, n);
}

namespace {

SpectrumResult point_spectrum(const ModelParams& mp, const WaveParams& wp,
                              const PerturbationParams& pp, const SweepConfig& cfg) {
    if (cfg.adaptive) return converged_spectrum(mp, wp, pp, cfg.hill);
    SpectrumResult r = spectrum_at(mp, wp, pp, cfg.hill.N, cfg.hill.refine,
                                   cfg.hill.N_wave);
    r.converged = true;  // fixed-N mode: caller opted out of the check
    return r;
}

}  // namespace

StabilityVerdict classify_point(const ModelParams& mp, const WaveParams& wp,
                                const PerturbationParams& pp,
                                const SweepConfig& cfg) {
    StabilityVerdict v;
    v.mp = mp;
    v.wp = wp;
    v.pp = pp;
    try {
        v.analytic = classify_analytic(mp, wp, pp, cfg.margin);
        SpectrumResult res = point_spectrum(mp, wp, pp, cfg);
        v.numeric_max_re = res.max_real_part;
        v.numeric_unstable = is_unstable(res);
        v.N_used = res.N;
        if (!res.converged) v.status = "unconverged";
        if (v.analytic == AnalyticVerdict::Indeterminate)
            v.agree = true;  // abstention
        else
            v.agree = (v.analytic == AnalyticVerdict::ModulationallyUnstable) ==
                      v.numeric_unstable;
    } catch (const std::exception& e) {
        v.status = std::string("error: ") + e.what();
        v.agree = false;
    }
    return v;
}

BandEdge find_band_edge(const ModelParams& mp, const WaveParams& wp,
                        const SweepConfig& cfg) {
    const ModulationalPrediction pred = modulational_prediction(mp, wp, 0.0);
    const bool band = mp.phi != 0.0 && pred.k_threshold &&
                      wp.k > *pred.k_threshold && pred.gamma_max > 0.0;
    if (!band) throw NoBracket("find_band_edge: analytic band is empty");

    auto unstable_at = [&](double gamma) {
        PerturbationParams pp{gamma, 0.0};
        return is_unstable(point_spectrum(mp, wp, pp, cfg));
    };

    double lo = 0.0;
    bool found = false;
    for (double f : {0.7, 0.5, 0.35, 0.25, 0.15}) {
        double g = f * pred.gamma_max;
        if (unstable_at(g)) {
            lo = g;
            found = true;
            break;
        }
    }
    if (!found)
        throw NoBracket("find_band_edge: no unstable point inside the predicted band");

    double hi = 4.0 * pred.gamma_max;
    while (unstable_at(hi)) {
        hi *= 2.0;
        if (hi > 64.0 * pred.gamma_max)
            throw NoBracket("find_band_edge: no stable point above the band");
    }

    const double tol = 2e-3 * pred.gamma_max;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        (unstable_at(mid) ? lo : hi) = mid;
    }

    BandEdge e;
    e.gamma_edge_numeric = 0.5 * (lo + hi);
    e.gamma_edge_analytic = pred.gamma_max;
    e.relative_gap = std::abs(e.gamma_edge_numeric - e.gamma_edge_analytic) /
                     e.gamma_edge_analytic;
    return e;
}

std::vector<CollisionAudit> collision_audit(const ModelParams& mp,
                                            const WaveParams& wp, int delta_max,
                                            const SweepConfig& cfg) {
    std::vector<Collision> catalog =
        enumerate_collisions(delta_max, {0.25, 0.5}, wp.k);
    std::vector<CollisionAudit> out;
    out.reserve(catalog.size());
    for (const Collision& c : catalog) {
        // The {-1,1} pair collides at gamma = 0, which is the modulational
        // origin, not a high-frequency collision: the translation Jordan
        // block there splits under any finite wave residual and would
        // always trip the noise floor.
        if (c.gamma_c == 0.0) continue;
        CollisionAudit audit;
        audit.collision = c;
        const double g2 = c.gamma_c * c.gamma_c;
        const double eps0 = (c.gamma_c == 0.0) ? 0.01 : 0.1 * g2;
        for (double eps : {0.0, eps0, -eps0}) {
            if (g2 + eps < 0.0) continue;
            PerturbationParams pp{std::sqrt(g2 + eps), c.tau};
            SpectrumResult res = point_spectrum(mp, wp, pp, cfg);
            audit.all_stable = audit.all_stable && !is_unstable(res);
            audit.spectra.emplace_back(eps, std::move(res));
        }
        out.push_back(std::move(audit));
    }
    return out;
}

std::vector<StabilityVerdict> grid_sweep_serial(const GridSpec& grid,
                                                const SweepConfig& cfg) {
    SweepConfig serial = cfg;
    serial.parallel = false;
    return grid_sweep(grid, serial);
}

std::vector<StabilityVerdict> grid_sweep(const GridSpec& grid, const SweepConfig& cfg) {
    struct Point {
        ModelParams mp;
        WaveParams wp;
        PerturbationParams pp;
    };
    std::vector<Point> points;
    for (double rho : grid.rho)
        for (double phi : grid.phi)
            for (double k : grid.k)
                for (double a : grid.a)
                    for (double gamma : grid.gamma)
                        for (double tau : grid.tau)
                            points.push_back({{rho, phi}, {k, a}, {gamma, tau}});

    std::vector<StabilityVerdict> rows(points.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(points.size());
#ifdef KD_HAVE_OPENMP
    if (cfg.parallel) {
        const int workers = effective_workers(cfg);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            rows[static_cast<std::size_t>(i)] =
                classify_point(points[static_cast<std::size_t>(i)].mp,
                               points[static_cast<std::size_t>(i)].wp,
                               points[static_cast<std::size_t>(i)].pp, cfg);
        return rows;
    }
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i)
        rows[static_cast<std::size_t>(i)] =
            classify_point(points[static_cast<std::size_t>(i)].mp,
                           points[static_cast<std::size_t>(i)].wp,
                           points[static_cast<std::size_t>(i)].pp, cfg);
    return rows;
}

std::string verdicts_to_csv(const std::vector<StabilityVerdict>& rows) {
    std::string out = "rho,phi,k,a,gamma,tau,analytic,max_re,numeric_unstable,agree,N,status\n";
    char buf[320];
    for (const auto& v : rows) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%s,%.12g,%d,%d,%d,%s\n",
                      v.mp.rho, v.mp.phi, v.wp.k, v.wp.a, v.pp.gamma, v.pp.tau,
                      to_string(v.analytic), v.numeric_max_re,
                      v.numeric_unstable ? 1 : 0, v.agree ? 1 : 0, v.N_used,
                      v.status.c_str());
        out += buf;
    }
    return out;
}

}  // namespace kd
