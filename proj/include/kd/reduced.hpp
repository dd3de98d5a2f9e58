#ifndef KD_REDUCED_HPP
#define KD_REDUCED_HPP

#include <array>
#include <complex>
#include <optional>

#include "kd/flatspec.hpp"
#include "kd/model.hpp"

namespace kd {

enum class AnalyticVerdict {
    ModulationallyUnstable,
    HighFrequencyStable,
    Indeterminate,
};

const char* to_string(AnalyticVerdict v);

// Leading-order prediction for the long-wavelength (modulational) pair.
// k_threshold is 2|rho/phi|; the infinite sentinel (phi = 0) is encoded as an
// empty optional, never a large float.
struct ModulationalPrediction {
    double Lambda = 0.0;
    std::complex<double> mu_plus;           // (3|gamma|/k) sqrt(Lambda) branch
    double gamma_max = 0.0;                 // k|a| sqrt(|phi^2/4 - rho^2/k^2|)
    std::optional<double> k_threshold;      // 2|rho/phi|; empty when phi = 0
    bool unstable = false;                  // Lambda > 0
};

struct HighFreqVerdict {
    int delta = 0;
    int n = 0;
    double tau = 0.0;
    double epsilon = 0.0;      // gamma^2 - gamma_c^2 detuning
    double discriminant = 0.0;
    bool stable = true;        // discriminant > 0 keeps the pair on the axis
    bool boundary = false;     // degenerate epsilon = a = 0 point
};

// Leading-order 2x2 action on the bifurcating pair:
//   [[0, -3 gamma^2/k + 3 a^2 k (phi^2/4 - rho^2/k^2)], [3 gamma^2/k, 0]].
std::array<std::array<double, 2>, 2> modulational_matrix(const ModelParams& mp,
                                                         const WaveParams& wp,
                                                         double gamma);

ModulationalPrediction modulational_prediction(const ModelParams& mp,
                                               const WaveParams& wp, double gamma);

// Delta = 2 collision discriminant at leading order; requires the collision
// regime (n+tau)(n+2+tau) < 0.
HighFreqVerdict delta2_discriminant(const ModelParams& mp, const WaveParams& wp,
                                    int n, double tau, double epsilon,
                                    double gamma_c);

// Two leading terms of the Delta >= 3 discriminant with a caller-supplied
// beta2 (the expansion coefficient has no closed form).
double highfreq_delta_ge3_structure(double k, int n, int delta, double tau,
                                    double epsilon, double beta2, double a);

// Decision combining the modulational band with the collision analysis.
// Verdicts within `margin` (relative) of the band edge are Indeterminate.
AnalyticVerdict classify_analytic(const ModelParams& mp, const WaveParams& wp,
                                  const PerturbationParams& pp,
                                  double margin = 0.1);

}  // namespace kd

#endif
