#ifndef KD_FLATSPEC_HPP
#define KD_FLATSPEC_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kd {

// Guard on |n+tau|: the antiderivative becomes singular as the shifted mode
// approaches zero, so operations reject smaller values.
inline constexpr double kDeltaFloor = 1e-3;

// Relative tolerance for the collision equality |Omega_n - Omega_m|.
inline constexpr double kCollisionTol = 1e-9;

// Transverse wavenumber and Floquet exponent of a perturbation.
// tau = 0 is the periodic case (mean-zero subspace).
struct PerturbationParams {
    double gamma = 0.0;
    double tau = 0.0;  // in (-1/2, 1/2]

    bool periodic() const { return tau == 0.0; }
};

// A resonance of the unperturbed spectrum: modes n and n + delta share the
// eigenvalue i*omega at transverse wavenumber gamma_c.
struct Collision {
    int n = 0;
    int delta = 0;
    double tau = 0.0;
    double gamma_c = 0.0;
    double omega = 0.0;
    bool at_origin = false;
};

// Dispersion value at real shifted mode s = n + tau. Shared by the closed
// forms below and by the Hill matrix diagonal so the a = 0 limit is exact.
inline double omega_shifted(double s, double gamma, double k) {
    return k * k * k * s * (1.0 - s * s) + 3.0 * gamma * gamma / (k * s);
}

// Omega_{n,gamma} = k^3 n (1 - n^2) + 3 gamma^2 / (k n), n != 0.
double omega(int n, double gamma, double k);

// Omega_{n,gamma,tau} = k^3 (n+tau)(1-(n+tau)^2) + 3 gamma^2 / (k (n+tau)).
double omega_tau(int n, double gamma, double tau, double k);

// Periodic (tau = 0) collision of modes n and n + delta; empty when the
// closed-form gamma_c^2 is negative (no collision).
std::optional<Collision> collision_gamma_periodic(int n, int delta, double k);

// Non-periodic (tau != 0) collision; the pair {-1, 0} never collides.
std::optional<Collision> collision_gamma_nonperiodic(int n, int delta, double tau,
                                                     double k);

// All collisions with delta <= delta_max over tau = 0 and the supplied grid,
// sorted by (delta, n, tau).
std::vector<Collision> enumerate_collisions(int delta_max,
                                            const std::vector<double>& tau_grid,
                                            double k);

// Default tau grid: 49 uniform points in (0, 1/2] plus mirrored negatives.
std::vector<double> default_tau_grid(int points_per_side = 49);

// gamma^2 bracket [k^4 D^2 (D^2-4)/48, k^4 (D^2-1)^2/36] containing all
// away-from-origin collisions with separation delta >= 2.
std::pair<double, double> collision_bracket(int delta, double k);

// CSV with header `delta,n,tau,gamma_c,omega,at_origin`.
std::string collisions_to_csv(const std::vector<Collision>& collisions);

}  // namespace kd

#endif
