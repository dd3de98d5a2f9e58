#include "kd/reduced.hpp"

#include <cmath>
#include <stdexcept>

namespace kd {

const char* to_string(AnalyticVerdict v) {
    switch (v) {
        case AnalyticVerdict::ModulationallyUnstable: return "modulationally_unstable";
        case AnalyticVerdict::HighFrequencyStable: return "high_frequency_stable";
        case AnalyticVerdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::array<std::array<double, 2>, 2> modulational_matrix(const ModelParams& mp,
                                                         const WaveParams& wp,
                                                         double gamma) {
    const double k = wp.k;
    const double a = wp.a;
    const double coef = mp.phi * mp.phi / 4.0 - mp.rho * mp.rho / (k * k);
    std::array<std::array<double, 2>, 2> m{};
    m[0][0] = 0.0;
    m[0][1] = -3.0 * gamma * gamma / k + 3.0 * a * a * k * coef;
    m[1][0] = 3.0 * gamma * gamma / k;
    m[1][1] = 0.0;
    return m;
}

ModulationalPrediction modulational_prediction(const ModelParams& mp,
                                               const WaveParams& wp, double gamma) {
    const double k = wp.k;
    const double a = wp.a;
    const double coef = mp.phi * mp.phi / 4.0 - mp.rho * mp.rho / (k * k);

    ModulationalPrediction p;
    p.Lambda = -gamma * gamma + a * a * k * k * coef;
    const double rate = 3.0 * std::abs(gamma) / k;
    if (p.Lambda >= 0.0)
        p.mu_plus = std::complex<double>(rate * std::sqrt(p.Lambda), 0.0);
    else
        p.mu_plus = std::complex<double>(0.0, rate * std::sqrt(-p.Lambda));
    p.gamma_max = k * std::abs(a) * std::sqrt(std::abs(coef));
    if (mp.phi != 0.0) p.k_threshold = 2.0 * std::abs(mp.rho / mp.phi);
    p.unstable = p.Lambda > 0.0;
    return p;
}

HighFreqVerdict delta2_discriminant(const ModelParams& mp, const WaveParams& wp,
                                    int n, double tau, double epsilon,
                                    double gamma_c) {
    const double s = static_cast<double>(n) + tau;
    const double t = s + 2.0;
    if (!(s * t < 0.0))
        throw std::invalid_argument(
            "delta2_discriminant: requires the collision regime (n+tau)(n+2+tau) < 0");

    const double k = wp.k;
    const double a = wp.a;
    const double a4 = a * a * a * a;
    const double rho = mp.rho;
    const double phi = mp.phi;
    const double A2 = rho / (2.0 * k * k);

    double disc = 36.0 * epsilon * epsilon / (k * k * s * s * t * t);
    disc -= 36.0 * gamma_c * gamma_c * phi * phi * a4 * A2 * A2 / (s * t);
    disc += 9.0 * a4 * k * k * (s + 1.0) * (s + 1.0) *
            (std::pow(rho, 4) / std::pow(k, 4) + std::pow(phi, 4) / 16.0);
    disc += 9.0 * a4 * rho * rho * phi * phi / (2.0 * k * k) * (1.0 - s * t);

    HighFreqVerdict v;
    v.delta = 2;
    v.n = n;
    v.tau = tau;
    v.epsilon = epsilon;
    v.discriminant = disc;
    v.boundary = (epsilon == 0.0 && a == 0.0);
    v.stable = v.boundary || disc > 0.0;
    return v;
}

double highfreq_delta_ge3_structure(double k, int n, int delta, double tau,
                                    double epsilon, double beta2, double a) {
    if (delta < 3)
        throw std::invalid_argument("highfreq_delta_ge3_structure: delta must be >= 3");
    const double s = static_cast<double>(n) + tau;
    const double t = s + static_cast<double>(delta);
    const double dd = static_cast<double>(delta);
    const double a2 = a * a;
    return 9.0 * dd * dd * epsilon * epsilon / (k * k * s * s * t * t) +
           dd * dd * beta2 * beta2 * a2 * a2;
}

AnalyticVerdict classify_analytic(const ModelParams& mp, const WaveParams& wp,
                                  const PerturbationParams& pp, double margin) {
    const ModulationalPrediction pred = modulational_prediction(mp, wp, pp.gamma);
    const bool band_exists = pp.periodic() && mp.phi != 0.0 && pred.k_threshold &&
                             wp.k > *pred.k_threshold && pred.gamma_max > 0.0 &&
                             mp.phi * mp.phi / 4.0 - mp.rho * mp.rho / (wp.k * wp.k) > 0.0;
    if (!band_exists) return AnalyticVerdict::HighFrequencyStable;

    const double g = std::abs(pp.gamma);
    if (g == 0.0) return AnalyticVerdict::HighFrequencyStable;  // no transverse content
    if (g < (1.0 - margin) * pred.gamma_max)
        return AnalyticVerdict::ModulationallyUnstable;
    if (g <= (1.0 + margin) * pred.gamma_max) return AnalyticVerdict::Indeterminate;
    return AnalyticVerdict::HighFrequencyStable;
}

}  // namespace kd
