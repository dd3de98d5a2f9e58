#include "kd/flatspec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <tuple>

namespace kd {

double omega(int n, double gamma, double k) {
    if (n == 0) throw std::invalid_argument("omega: n must be nonzero");
    if (!(k > 0.0)) throw std::invalid_argument("omega: k must be positive");
    return omega_shifted(static_cast<double>(n), gamma, k);
}

double omega_tau(int n, double gamma, double tau, double k) {
    if (!(k > 0.0)) throw std::invalid_argument("omega_tau: k must be positive");
    const double s = static_cast<double>(n) + tau;
    if (std::abs(s) < kDeltaFloor)
        throw std::invalid_argument("omega_tau: |n+tau| below singular-mode floor");
    return omega_shifted(s, gamma, k);
}

namespace {

bool omega_at_origin(double om) { return std::abs(om) <= kCollisionTol; }

}  // namespace

std::optional<Collision> collision_gamma_periodic(int n, int delta, double k) {
    if (delta < 1) throw std::invalid_argument("collision_gamma_periodic: delta must be >= 1");
    if (n == 0 || n == -delta)
        throw std::invalid_argument("collision_gamma_periodic: n and n+delta must be nonzero");
    const double nd = static_cast<double>(n);
    const double dd = static_cast<double>(delta);
    const double k4 = std::pow(k, 4);
    // 3 gamma_c^2 = k^4 n (n+D) (-3n^2 - 3nD - D^2 + 1)
    const double rhs = k4 * nd * (nd + dd) * (-3.0 * nd * nd - 3.0 * nd * dd - dd * dd + 1.0);
    if (rhs < 0.0) return std::nullopt;
    Collision c;
    c.n = n;
    c.delta = delta;
    c.tau = 0.0;
    c.gamma_c = std::sqrt(rhs / 3.0) + 0.0;  // normalize -0.0 from a zero rhs
    c.omega = omega(n, c.gamma_c, k);
    c.at_origin = omega_at_origin(c.omega);
    return c;
}

std::optional<Collision> collision_gamma_nonperiodic(int n, int delta, double tau,
                                                     double k) {
    if (delta < 1)
        throw std::invalid_argument("collision_gamma_nonperiodic: delta must be >= 1");
    if (tau == 0.0 || tau <= -0.5 || tau > 0.5)
        throw std::invalid_argument("collision_gamma_nonperiodic: tau must be in (-1/2,1/2]\\{0}");
    const double s = static_cast<double>(n) + tau;
    const double t = s + static_cast<double>(delta);
    if (std::abs(s) < kDeltaFloor || std::abs(t) < kDeltaFloor)
        throw std::invalid_argument("collision_gamma_nonperiodic: shifted mode below floor");
    // The pair {n, n+delta} = {-1, 0} never collides.
    if ((n == -1 && delta == 1)) return std::nullopt;
    const double dd = static_cast<double>(delta);
    const double k4 = std::pow(k, 4);
    // 3 gamma^2 = -k^4 [3 s^2 t^2 + s t (D^2 - 1)]
    const double rhs = -k4 * (3.0 * s * s * t * t + s * t * (dd * dd - 1.0));
    if (rhs < 0.0) return std::nullopt;
    Collision c;
    c.n = n;
    c.delta = delta;
    c.tau = tau;
    c.gamma_c = std::sqrt(rhs / 3.0);
    c.omega = omega_tau(n, c.gamma_c, tau, k);
    c.at_origin = omega_at_origin(c.omega);
    return c;
}

std::vector<Collision> enumerate_collisions(int delta_max,
                                            const std::vector<double>& tau_grid,
                                            double k) {
    if (delta_max < 1) throw std::invalid_argument("enumerate_collisions: delta_max >= 1");
    std::vector<Collision> out;
    for (int delta = 1; delta <= delta_max; ++delta) {
        for (int n = -delta + 1; n <= -1; ++n) {
            if (auto c = collision_gamma_periodic(n, delta, k)) out.push_back(*c);
        }
        for (double tau : tau_grid) {
            if (tau == 0.0) continue;
            // n = 0 participates only for tau < 0 (the conjugate {0, delta}
            // pairs); the sign condition inside rejects it otherwise.
            for (int n = -delta; n <= 0; ++n) {
                if (n == -1 && delta == 1) continue;
                if (auto c = collision_gamma_nonperiodic(n, delta, tau, k))
                    out.push_back(*c);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Collision& a, const Collision& b) {
        return std::tie(a.delta, a.n, a.tau) < std::tie(b.delta, b.n, b.tau);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Collision& a, const Collision& b) {
                              return a.delta == b.delta && a.n == b.n && a.tau == b.tau;
                          }),
              out.end());
    return out;
}

std::vector<double> default_tau_grid(int points_per_side) {
    std::vector<double> grid;
    grid.reserve(2 * static_cast<std::size_t>(points_per_side));
    for (int i = 1; i <= points_per_side; ++i) {
        double tau = 0.5 * static_cast<double>(i) / static_cast<double>(points_per_side);
        grid.push_back(-tau);
        grid.push_back(tau);
    }
    // -1/2 is outside (-1/2, 1/2]; drop the mirrored endpoint.
    std::erase(grid, -0.5);
    std::sort(grid.begin(), grid.end());
    return grid;
}

std::pair<double, double> collision_bracket(int delta, double k) {
    if (delta < 2) throw std::invalid_argument("collision_bracket: delta must be >= 2");
    const double dd = static_cast<double>(delta);
    const double k4 = std::pow(k, 4);
    return {k4 * dd * dd * (dd * dd - 4.0) / 48.0,
            k4 * (dd * dd - 1.0) * (dd * dd - 1.0) / 36.0};
}

std::string collisions_to_csv(const std::vector<Collision>& collisions) {
    std::string out = "delta,n,tau,gamma_c,omega,at_origin\n";
    char buf[160];
    for (const auto& c : collisions) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%.12g,%.12g,%.12g,%d\n", c.delta, c.n,
                      c.tau, c.gamma_c, c.omega, c.at_origin ? 1 : 0);
        out += buf;
    }
    return out;
}

}  // namespace kd
