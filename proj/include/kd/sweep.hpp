#ifndef KD_SWEEP_HPP
#define KD_SWEEP_HPP

#include <string>
#include <vector>

#include "kd/hill.hpp"
#include "kd/reduced.hpp"

namespace kd {

struct NoBracket : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepConfig {
    HillConfig hill;
    double margin = 0.1;       // Indeterminate band around the analytic edge
    bool adaptive = false;     // converge N per point instead of fixed hill.N
    bool parallel = true;      // OpenMP over grid points
    int num_workers = 0;       // 0 = library default / KD_NUM_WORKERS
};

struct StabilityVerdict {
    ModelParams mp;
    WaveParams wp;
    PerturbationParams pp;
    AnalyticVerdict analytic = AnalyticVerdict::Indeterminate;
    double numeric_max_re = 0.0;
    bool numeric_unstable = false;
    bool agree = true;
    int N_used = 0;
    std::string status = "ok";
};

struct BandEdge {
    double gamma_edge_numeric = 0.0;
    double gamma_edge_analytic = 0.0;
    double relative_gap = 0.0;
};

struct CollisionAudit {
    Collision collision;
    // Spectra at the collision and at the gamma^2 detunings +-eps0.
    std::vector<std::pair<double, SpectrumResult>> spectra;  // (epsilon, result)
    bool all_stable = true;
};

// Cartesian product grid over the six parameters.
struct GridSpec {
    std::vector<double> rho{0.0};
    std::vector<double> phi{0.0};
    std::vector<double> k{1.0};
    std::vector<double> a{0.0};
    std::vector<double> gamma{0.0};
    std::vector<double> tau{0.0};
};

StabilityVerdict classify_point(const ModelParams& mp, const WaveParams& wp,
                                const PerturbationParams& pp,
                                const SweepConfig& cfg = {});

// Bisects gamma in [0, 4*gamma_max] for the numeric stable/unstable
// transition at tau = 0. Throws NoBracket when no unstable point is found.
BandEdge find_band_edge(const ModelParams& mp, const WaveParams& wp,
                        const SweepConfig& cfg = {});

std::vector<CollisionAudit> collision_audit(const ModelParams& mp,
                                            const WaveParams& wp, int delta_max,
                                            const SweepConfig& cfg = {});

std::vector<StabilityVerdict> grid_sweep(const GridSpec& grid,
                                         const SweepConfig& cfg = {});

// Serial reference path, kept for testing the parallel sweep against.
std::vector<StabilityVerdict> grid_sweep_serial(const GridSpec& grid,
                                                const SweepConfig& cfg = {});

// CSV, header `rho,phi,k,a,gamma,tau,analytic,max_re,numeric_unstable,agree,N,status`.
std::string verdicts_to_csv(const std::vector<StabilityVerdict>& rows);

// Worker count after applying cfg and the KD_NUM_WORKERS env cap.
int effective_workers(const SweepConfig& cfg);

}  // namespace kd

#endif
