#ifndef KD_IO_HPP
#define KD_IO_HPP

#include <json.hpp>

#include "kd/hill.hpp"
#include "kd/sweep.hpp"

namespace kd {

// FourierSeries <-> JSON array of [n, re, im] triples (nonzero modes only).
inline nlohmann::json to_json(const FourierSeries& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (int n = -f.order(); n <= f.order(); ++n) {
        cplx c = f.coeff(n);
        if (c != cplx(0.0)) arr.push_back({n, c.real(), c.imag()});
    }
    return arr;
}

inline FourierSeries fourier_from_json(const nlohmann::json& arr) {
    int order = 0;
    for (const auto& t : arr) order = std::max(order, std::abs(t.at(0).get<int>()));
    FourierSeries f(order);
    for (const auto& t : arr)
        f.set_coeff(t.at(0).get<int>(),
                    cplx(t.at(1).get<double>(), t.at(2).get<double>()));
    return f;
}

inline nlohmann::json params_to_json(const ModelParams& mp, const WaveParams& wp,
                                     const PerturbationParams& pp) {
    return {{"rho", mp.rho}, {"phi", mp.phi}, {"k", wp.k},
            {"a", wp.a},     {"gamma", pp.gamma}, {"tau", pp.tau}};
}

inline nlohmann::json to_json(const SpectrumResult& r, const ModelParams& mp,
                              const WaveParams& wp, const PerturbationParams& pp) {
    nlohmann::json ev = nlohmann::json::array();
    for (const cplx& mu : r.eigenvalues) ev.push_back({mu.real(), mu.imag()});
    return {{"params", params_to_json(mp, wp, pp)},
            {"N", r.N},
            {"eigenvalues", ev},
            {"max_real_part", r.max_real_part},
            {"symmetry_defect", r.symmetry_defect},
            {"converged", r.converged}};
}

inline nlohmann::json to_json(const BandEdge& e) {
    return {{"gamma_edge_numeric", e.gamma_edge_numeric},
            {"gamma_edge_analytic", e.gamma_edge_analytic},
            {"relative_gap", e.relative_gap}};
}

}  // namespace kd

#endif
