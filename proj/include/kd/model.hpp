#ifndef KD_MODEL_HPP
#define KD_MODEL_HPP

#include <stdexcept>

#include "kd/fourier.hpp"

namespace kd {

// Equation parameters of the Konopelchenko-Dubrovsky family.
// phi = 0 reduces to KP-II, rho = 0 to mKP-II.
struct ModelParams {
    double rho = 0.0;
    double phi = 0.0;

    bool is_kp2() const { return phi == 0.0; }
    bool is_mkp2() const { return rho == 0.0; }
};

// Parameters of the 2pi/k-periodic carrier wave. The constants b1, b2 of the
// integrated traveling-wave equation are kept in the data model but pinned to
// zero; all operations assume b1 = b2 = 0.
struct WaveParams {
    double k = 1.0;   // wavenumber, > 0
    double a = 0.0;   // amplitude parameter, |a| small
    double b1 = 0.0;
    double b2 = 0.0;
};

// Closed-form small-amplitude expansion coefficients:
//   w(z) = a cos z + a^2 (A0 + A2 cos 2z) + a^3 A3 cos 3z + O(a^4)
//   c    = k^2 + a^2 c2 + O(a^4)
struct WaveExpansion {
    double A0 = 0.0;
    double A2 = 0.0;
    double A3 = 0.0;
    double c2 = 0.0;
    double c0 = 0.0;  // bifurcation speed k^2
};

struct RefinedWave {
    FourierSeries w;          // even, real
    double c = 0.0;           // wave speed
    double residual_norm = 0.0;
    int newton_iters = 0;
};

struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularJacobian : std::runtime_error {
    using std::runtime_error::runtime_error;
};

WaveExpansion expansion_coefficients(const ModelParams& mp, const WaveParams& wp);

// Fourier series of the expansion wave; modes {0,+-1,+-2,+-3} populated.
FourierSeries wave_profile(const WaveExpansion& exp, const WaveParams& wp, int N);

// c = k^2 + a^2 c2.
double wave_speed(const WaveExpansion& exp, const WaveParams& wp);

// L^2(T) norm of -c w - k^2 w_zz + (phi^2/2) w^3 - 3 rho w^2, products done by
// exact convolution (no aliasing).
double residual_norm(const FourierSeries& w, double c, const ModelParams& mp,
                     const WaveParams& wp);

// Newton-Galerkin solve in the even (cosine) subspace with the first cosine
// amplitude fixed to a. Initial guess is the closed-form expansion.
RefinedWave refine_newton(const ModelParams& mp, const WaveParams& wp, int N,
                          double tol = 1e-12, int max_iters = 50,
                          double amplitude_guard = 0.2);

}  // namespace kd

#endif
