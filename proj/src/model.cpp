#include "kd/model.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace kd {

WaveExpansion expansion_coefficients(const ModelParams& mp, const WaveParams& wp) {
    if (!(wp.k > 0.0))
        throw std::invalid_argument("expansion_coefficients: k must be positive");
    const double k2 = wp.k * wp.k;
    const double k4 = k2 * k2;
    WaveExpansion e;
    e.A0 = -3.0 * mp.rho / (2.0 * k2);
    e.A2 = mp.rho / (2.0 * k2);
    e.A3 = -mp.phi * mp.phi / (64.0 * k2) + 3.0 * mp.rho * mp.rho / (16.0 * k4);
    e.c2 = 3.0 * mp.phi * mp.phi / 8.0 + 15.0 * mp.rho * mp.rho / (2.0 * k2);
    e.c0 = k2;
    return e;
}

FourierSeries wave_profile(const WaveExpansion& exp, const WaveParams& wp, int N) {
    if (N < 3) throw std::invalid_argument("wave_profile: N must be >= 3");
    const double a = wp.a;
    std::vector<double> amps(static_cast<std::size_t>(N) + 1, 0.0);
    amps[0] = a * a * exp.A0;
    amps[1] = a;
    amps[2] = a * a * exp.A2;
    amps[3] = a * a * a * exp.A3;
    return FourierSeries::from_cosine(amps);
}

double wave_speed(const WaveExpansion& exp, const WaveParams& wp) {
    return exp.c0 + wp.a * wp.a * exp.c2;
}

namespace {

// Fourier coefficients of G(w,c) = -c w - k^2 w_zz + (phi^2/2) w^3 - 3 rho w^2.
FourierSeries galerkin_residual(const FourierSeries& w, double c,
                                const ModelParams& mp, const WaveParams& wp) {
    const double k2 = wp.k * wp.k;
    FourierSeries w2 = w * w;
    FourierSeries w3 = w2 * w;
    FourierSeries r(w3.order());
    for (int n = -r.order(); n <= r.order(); ++n) {
        cplx v = (-c + k2 * static_cast<double>(n) * static_cast<double>(n)) * w.coeff(n);
        v += 0.5 * mp.phi * mp.phi * w3.coeff(n);
        v -= 3.0 * mp.rho * w2.coeff(n);
        r.set_coeff(n, v);
    }
    return r;
}

FourierSeries cosine_basis(int m, int /*N*/) {
    std::vector<double> amps(static_cast<std::size_t>(m) + 1, 0.0);
    amps[static_cast<std::size_t>(m)] = 1.0;
    return FourierSeries::from_cosine(amps);
}

}  // namespace

double residual_norm(const FourierSeries& w, double c, const ModelParams& mp,
                     const WaveParams& wp) {
    return galerkin_residual(w, c, mp, wp).l2_norm();
}

RefinedWave refine_newton(const ModelParams& mp, const WaveParams& wp, int N,
                          double tol, int max_iters, double amplitude_guard) {
    if (N < 8) throw std::invalid_argument("refine_newton: N must be >= 8");
    if (std::abs(wp.a) > amplitude_guard)
        throw std::invalid_argument("refine_newton: |a| exceeds the expansion-validity guard");

    const WaveExpansion exp = expansion_coefficients(mp, wp);

    if (wp.a == 0.0) {
        RefinedWave out;
        out.w = FourierSeries(N);
        out.c = exp.c0;
        out.residual_norm = 0.0;
        out.newton_iters = 0;
        return out;
    }

    // Unknowns: cosine amplitudes b_0, b_2, ..., b_N and the speed c;
    // b_1 is pinned to a (amplitude normalization). Equations: projections of
    // the Galerkin residual onto cos(mz), m = 0..N.
    const int n_unknowns = N + 1;
    std::vector<double> amps(static_cast<std::size_t>(N) + 1, 0.0);
    {
        const double a = wp.a;
        amps[0] = a * a * exp.A0;
        amps[1] = a;
        amps[2] = a * a * exp.A2;
        amps[3] = a * a * a * exp.A3;
    }
    double c = wave_speed(exp, wp);
    const double k2 = wp.k * wp.k;

    int iters = 0;
    for (; iters < max_iters; ++iters) {
        FourierSeries w = FourierSeries::from_cosine(amps);
        FourierSeries r = galerkin_residual(w, c, mp, wp);

        Eigen::VectorXd F(n_unknowns);
        for (int m = 0; m <= N; ++m) F(m) = r.coeff(m).real();
        if (F.lpNorm<Eigen::Infinity>() <= tol) break;

        FourierSeries w2 = w * w;
        Eigen::MatrixXd J(n_unknowns, n_unknowns);
        int col = 0;
        for (int j = 0; j <= N; ++j) {
            if (j == 1) continue;  // fixed amplitude
            FourierSeries ej = cosine_basis(j, N);
            FourierSeries lin = w2 * ej;  // d(w^3)/db_j = 3 w^2 e_j
            FourierSeries quad = w * ej;  // d(w^2)/db_j = 2 w e_j
            for (int m = 0; m <= N; ++m) {
                double v = (-c + k2 * static_cast<double>(m) * static_cast<double>(m)) *
                           ej.coeff(m).real();
                v += 1.5 * mp.phi * mp.phi * lin.coeff(m).real();
                v -= 6.0 * mp.rho * quad.coeff(m).real();
                J(m, col) = v;
            }
            ++col;
        }
        for (int m = 0; m <= N; ++m) J(m, n_unknowns - 1) = -w.coeff(m).real();

        Eigen::FullPivLU<Eigen::MatrixXd> lu(J);
        if (!lu.isInvertible())
            throw SingularJacobian("refine_newton: singular Jacobian");
        Eigen::VectorXd dx = lu.solve(F);

        col = 0;
        for (int j = 0; j <= N; ++j) {
            if (j == 1) continue;
            amps[static_cast<std::size_t>(j)] -= dx(col++);
        }
        c -= dx(n_unknowns - 1);
    }

    FourierSeries w = FourierSeries::from_cosine(amps);
    double rn = residual_norm(w, c, mp, wp);
    if (iters >= max_iters && rn > tol)
        throw NonConvergence("refine_newton: iteration cap reached");

    RefinedWave out;
    out.w = w;
    out.c = c;
    out.residual_norm = rn;
    out.newton_iters = iters;
    return out;
}

}  // namespace kd
