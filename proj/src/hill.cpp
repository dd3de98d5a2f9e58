#include "kd/hill.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kd {

namespace {

int populated_order(const FourierSeries& w) {
    double mx = 0.0;
    for (int n = -w.order(); n <= w.order(); ++n) mx = std::max(mx, std::abs(w.coeff(n)));
    if (mx == 0.0) return 0;
    int top = 0;
    for (int n = 1; n <= w.order(); ++n)
        if (std::abs(w.coeff(n)) > 1e-13 * mx || std::abs(w.coeff(-n)) > 1e-13 * mx)
            top = n;
    return top;
}

double hausdorff_to_reflection(const std::vector<cplx>& ev) {
    // Reflection through the imaginary axis: mu -> -conj(mu). The reflection
    // is an isometric involution, so one direction of the Hausdorff distance
    // suffices.
    double worst = 0.0;
    for (const cplx& mu : ev) {
        double best = std::numeric_limits<double>::infinity();
        for (const cplx& nu : ev) {
            double d = std::abs(mu - (-std::conj(nu)));
            if (d < best) best = d;
        }
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

std::pair<FourierSeries, double> build_wave(const ModelParams& mp,
                                            const WaveParams& wp, int N_wave,
                                            bool refine) {
    if (refine) {
        RefinedWave rw = refine_newton(mp, wp, N_wave);
        return {rw.w, rw.c};
    }
    WaveExpansion e = expansion_coefficients(mp, wp);
    return {wave_profile(e, wp, std::max(3, N_wave)), wave_speed(e, wp)};
}

OperatorMatrix assemble(const FourierSeries& w, double c, const ModelParams& mp,
                        const WaveParams& wp, const PerturbationParams& pp, int N) {
    const int top = populated_order(w);
    if (N < 2 * top + 2)
        throw TruncationTooSmall("assemble: N must be >= 2*(top wave mode) + 2");

    const double k = wp.k;
    const double tau = pp.tau;
    const double gamma = pp.gamma;

    OperatorMatrix M;
    M.tau = tau;
    M.excluded_zero_mode = (tau == 0.0);
    for (int n = -N; n <= N; ++n) {
        if (n == 0 && M.excluded_zero_mode) continue;
        if (std::abs(static_cast<double>(n) + tau) < kDeltaFloor)
            throw SingularInverseMode("assemble: |n+tau| below singular-mode floor");
        M.modes.push_back(n);
    }

    const FourierSeries w2 = w * w;
    const FourierSeries wz = w.derivative();

    const Eigen::Index dim = static_cast<Eigen::Index>(M.modes.size());
    M.entries = Eigen::MatrixXcd::Zero(dim, dim);

    for (Eigen::Index r = 0; r < dim; ++r) {
        const double sn = static_cast<double>(M.modes[static_cast<std::size_t>(r)]) + tau;
        const cplx Dn(0.0, sn);  // (d/dz + i tau) on mode n
        for (Eigen::Index col = 0; col < dim; ++col) {
            const double sm =
                static_cast<double>(M.modes[static_cast<std::size_t>(col)]) + tau;
            const int diff = M.modes[static_cast<std::size_t>(r)] -
                             M.modes[static_cast<std::size_t>(col)];
            cplx v(0.0);
            if (r == col) {
                // kc D + k^3 D^3 - (3 gamma^2/k) D^{-1}; every term is pure
                // imaginary. Split off the speed correction c - k^2 so the
                // a = 0 diagonal reproduces omega_shifted bit-exactly.
                v += cplx(0.0, k * sn * (c - k * k) + omega_shifted(sn, gamma, k));
            }
            // Multiplication operators act first, the derivative factor after:
            // 6 k rho D (w .) - (3/2) phi^2 k D (w^2 .)
            v += 6.0 * k * mp.rho * Dn * w.coeff(diff);
            v -= 1.5 * mp.phi * mp.phi * k * Dn * w2.coeff(diff);
            // -3 i phi gamma (w_z .) D^{-1}: the antiderivative acts first.
            v -= cplx(0.0, 3.0 * mp.phi * gamma) * wz.coeff(diff) / cplx(0.0, sm);
            M.entries(r, col) = v;
        }
    }
    return M;
}

SpectrumResult spectrum(const OperatorMatrix& M) {
    SpectrumResult res;
    const Eigen::Index dim = M.entries.rows();
    res.N = static_cast<int>((M.modes.size() + (M.excluded_zero_mode ? 1 : 0) - 1) / 2);

    bool diagonal = true;
    for (Eigen::Index r = 0; r < dim && diagonal; ++r)
        for (Eigen::Index c = 0; c < dim; ++c)
            if (r != c && M.entries(r, c) != cplx(0.0)) {
                diagonal = false;
                break;
            }

    if (diagonal) {
        res.eigenvalues.reserve(static_cast<std::size_t>(dim));
        for (Eigen::Index r = 0; r < dim; ++r) res.eigenvalues.push_back(M.entries(r, r));
    } else {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(M.entries, false);
        if (solver.info() != Eigen::Success)
            throw EigensolverFailure("spectrum: dense eigensolver did not converge");
        res.eigenvalues.assign(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + dim);
    }

    res.max_real_part = -std::numeric_limits<double>::infinity();
    for (const cplx& mu : res.eigenvalues)
        res.max_real_part = std::max(res.max_real_part, mu.real());
    res.symmetry_defect = hausdorff_to_reflection(res.eigenvalues);
    return res;
}

SpectrumResult spectrum_at(const ModelParams& mp, const WaveParams& wp,
                           const PerturbationParams& pp, int N, bool refine,
                           int N_wave) {
    auto [w, c] = build_wave(mp, wp, N_wave, refine);
    return spectrum(assemble(w, c, mp, wp, pp, N));
}

double max_growth(const ModelParams& mp, const WaveParams& wp,
                  const PerturbationParams& pp, int N, bool refine) {
    return spectrum_at(mp, wp, pp, N, refine).max_real_part;
}

namespace {

// Distance between the ten smallest-|Im| eigenvalues of `coarse` and their
// nearest matches in `fine`, relative to the eigenvalue magnitude.
double tracked_eigenvalue_defect(const SpectrumResult& coarse,
                                 const SpectrumResult& fine) {
    std::vector<cplx> tracked = coarse.eigenvalues;
    std::sort(tracked.begin(), tracked.end(), [](const cplx& a, const cplx& b) {
        return std::abs(a.imag()) < std::abs(b.imag());
    });
    if (tracked.size() > 10) tracked.resize(10);
    double worst = 0.0;
    for (const cplx& mu : tracked) {
        double best = std::numeric_limits<double>::infinity();
        for (const cplx& nu : fine.eigenvalues) best = std::min(best, std::abs(mu - nu));
        worst = std::max(worst, best / std::max(1.0, std::abs(mu)));
    }
    return worst;
}

}  // namespace

ConvergenceReport convergence_check(const ModelParams& mp, const WaveParams& wp,
                                    const PerturbationParams& pp, int N,
                                    const HillConfig& cfg) {
    if (N < 8) throw std::invalid_argument("convergence_check: N must be >= 8");
    SpectrumResult coarse = spectrum_at(mp, wp, pp, N, cfg.refine, cfg.N_wave);
    SpectrumResult fine = spectrum_at(mp, wp, pp, 2 * N, cfg.refine, cfg.N_wave);
    const double re_defect = std::abs(coarse.max_real_part - fine.max_real_part);
    const double ev_defect = tracked_eigenvalue_defect(coarse, fine);
    ConvergenceReport rep;
    rep.defect = std::max(re_defect, ev_defect);
    rep.converged = re_defect <= cfg.max_re_tol && ev_defect <= cfg.eig_tol;
    return rep;
}

SpectrumResult converged_spectrum(const ModelParams& mp, const WaveParams& wp,
                                  const PerturbationParams& pp,
                                  const HillConfig& cfg) {
    int N = cfg.N;
    while (true) {
        SpectrumResult coarse = spectrum_at(mp, wp, pp, N, cfg.refine, cfg.N_wave);
        if (2 * N > cfg.N_cap) {
            coarse.converged = false;
            return coarse;
        }
        SpectrumResult fine = spectrum_at(mp, wp, pp, 2 * N, cfg.refine, cfg.N_wave);
        const double re_defect = std::abs(coarse.max_real_part - fine.max_real_part);
        const double ev_defect = tracked_eigenvalue_defect(coarse, fine);
        if (re_defect <= cfg.max_re_tol && ev_defect <= cfg.eig_tol) {
            fine.converged = true;
            return fine;
        }
        N *= 2;
    }
}

}  // namespace kd
