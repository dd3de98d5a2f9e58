#ifndef KD_HILL_HPP
#define KD_HILL_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "kd/flatspec.hpp"
#include "kd/model.hpp"

namespace kd {

struct TruncationTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SingularInverseMode : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EigensolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated Fourier matrix of the linearized operator H_a(gamma, tau).
// Modes run over [-N..N], with 0 removed in the periodic case (tau = 0, the
// operator acts on the mean-zero subspace).
struct OperatorMatrix {
    Eigen::MatrixXcd entries;
    std::vector<int> modes;
    double tau = 0.0;
    bool excluded_zero_mode = false;
};

struct SpectrumResult {
    std::vector<cplx> eigenvalues;
    int N = 0;
    double max_real_part = 0.0;
    double symmetry_defect = 0.0;  // Hausdorff distance to the reflected set
    bool converged = true;
};

struct ConvergenceReport {
    double defect = 0.0;
    bool converged = false;
};

struct HillConfig {
    int N = 32;                 // initial truncation
    int N_cap = 256;            // doubling stops here
    bool refine = false;        // Newton-refine the wave before assembly
    int N_wave = 16;            // Galerkin size for the Newton refinement
    double max_re_tol = 1e-9;   // convergence: absolute on max_real_part
    double eig_tol = 1e-7;      // convergence: relative on tracked eigenvalues
};

// Wave profile and speed used by the spectral problem (expansion by default,
// Newton-refined on request).
std::pair<FourierSeries, double> build_wave(const ModelParams& mp,
                                            const WaveParams& wp, int N_wave,
                                            bool refine);

OperatorMatrix assemble(const FourierSeries& w, double c, const ModelParams& mp,
                        const WaveParams& wp, const PerturbationParams& pp, int N);

// Dense non-Hermitian eigensolve (eigenvalues only). Exactly diagonal input
// returns the diagonal entries verbatim.
SpectrumResult spectrum(const OperatorMatrix& M);

// wave -> assemble -> spectrum at a fixed truncation.
SpectrumResult spectrum_at(const ModelParams& mp, const WaveParams& wp,
                           const PerturbationParams& pp, int N, bool refine = false,
                           int N_wave = 16);

double max_growth(const ModelParams& mp, const WaveParams& wp,
                  const PerturbationParams& pp, int N, bool refine = false);

// Compares truncations N and 2N on max_real_part and the 10 eigenvalues of
// smallest |Im|.
ConvergenceReport convergence_check(const ModelParams& mp, const WaveParams& wp,
                                    const PerturbationParams& pp, int N,
                                    const HillConfig& cfg = {});

// Doubles N until convergence_check passes or N_cap is hit; the result
// carries the final truncation and the converged flag.
SpectrumResult converged_spectrum(const ModelParams& mp, const WaveParams& wp,
                                  const PerturbationParams& pp,
                                  const HillConfig& cfg = {});

// Adaptive noise floor for declaring instability from max_real_part.
inline double instability_floor(const SpectrumResult& r) {
    return 10.0 * r.symmetry_defect + 1e-10;
}
inline bool is_unstable(const SpectrumResult& r) {
    return r.max_real_part > instability_floor(r);
}

}  // namespace kd

#endif
