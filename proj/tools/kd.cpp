// Command-line front end for the KD transverse-stability toolkit.
//
// Subcommands: wave, spectrum, collisions, band-edge, sweep, verify.
// Exit codes: 0 success, 1 validation error, 2 numeric failure,
// 3 verification failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "kd/io.hpp"
#include "kd/verify.hpp"

namespace {

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

struct CommonParams {
    double rho = 0.0, phi = 0.0, k = 1.0, a = 0.0, gamma = 0.0, tau = 0.0;
    int N = 32;
    bool refine = false;
    std::string output;
};

void add_common(CLI::App* cmd, CommonParams& p, bool with_perturbation) {
    cmd->add_option("--rho", p.rho, "nonlinearity parameter rho");
    cmd->add_option("--phi", p.phi, "nonlinearity parameter phi");
    cmd->add_option("--k", p.k, "wavenumber (> 0)")->check(CLI::PositiveNumber);
    cmd->add_option("--a", p.a, "amplitude parameter");
    if (with_perturbation) {
        cmd->add_option("--gamma", p.gamma, "transverse wavenumber");
        cmd->add_option("--tau", p.tau, "Floquet exponent in (-1/2, 1/2]")
            ->check(CLI::Range(-0.5, 0.5));
    }
    cmd->add_option("-N,--modes", p.N, "Fourier truncation");
    cmd->add_flag("--refine", p.refine, "Newton-refine the wave");
    cmd->add_option("-o,--output", p.output, "output file (default stdout)");
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw CLI::ValidationError("empty value list");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic traveling waves of the Konopelchenko-Dubrovsky equation "
                 "and their transverse spectral stability"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file with [sections]");
    app.allow_config_extras(false);

    CommonParams p;

    auto* wave = app.add_subcommand("wave", "wave profile coefficients and residual");
    add_common(wave, p, false);

    auto* spectrum = app.add_subcommand("spectrum", "Hill spectrum at one point");
    add_common(spectrum, p, true);
    bool adaptive = false;
    spectrum->add_flag("--adaptive", adaptive, "double N until converged");

    auto* collisions = app.add_subcommand("collisions", "collision catalog CSV");
    int delta_max = 4;
    int tau_points = 49;
    collisions->add_option("--delta-max", delta_max, "largest mode separation")
        ->check(CLI::PositiveNumber);
    collisions->add_option("--k", p.k, "wavenumber")->check(CLI::PositiveNumber);
    collisions->add_option("--tau-points", tau_points, "tau grid points per side");
    collisions->add_option("-o,--output", p.output, "output file");

    auto* band = app.add_subcommand("band-edge", "numeric vs analytic band edge");
    add_common(band, p, false);

    auto* sweep = app.add_subcommand("sweep", "stability verdict table over a grid");
    std::string rho_s = "0", phi_s = "2", k_s = "1", a_s = "0.02", gamma_s = "0.01",
                tau_s = "0";
    sweep->add_option("--rho", rho_s, "comma list of rho values");
    sweep->add_option("--phi", phi_s, "comma list of phi values");
    sweep->add_option("--k", k_s, "comma list of k values");
    sweep->add_option("--a", a_s, "comma list of a values");
    sweep->add_option("--gamma", gamma_s, "comma list of gamma values");
    sweep->add_option("--tau", tau_s, "comma list of tau values");
    bool serial = false;
    sweep->add_flag("--serial", serial, "disable the worker pool");
    sweep->add_option("-N,--modes", p.N, "Fourier truncation");
    sweep->add_option("-o,--output", p.output, "output file");

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    int only = 0;
    verify->add_option("--criterion", only, "run a single criterion (1-10)")
        ->check(CLI::Range(0, 10));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // any parse/validation problem is exit 1
    }

    try {
        kd::ModelParams mp{p.rho, p.phi};
        kd::WaveParams wp{p.k, p.a};

        if (*wave) {
            auto [w, c] = kd::build_wave(mp, wp, std::max(8, p.N), p.refine);
            nlohmann::json j = {{"params", kd::params_to_json(mp, wp, {})},
                                {"c", c},
                                {"coefficients", kd::to_json(w)},
                                {"residual_norm", kd::residual_norm(w, c, mp, wp)}};
            write_output(p.output, j.dump(2) + "\n");
        } else if (*spectrum) {
            kd::PerturbationParams pp{p.gamma, p.tau};
            kd::SpectrumResult res;
            if (adaptive) {
                kd::HillConfig hc;
                hc.N = p.N;
                hc.refine = p.refine;
                res = kd::converged_spectrum(mp, wp, pp, hc);
            } else {
                res = kd::spectrum_at(mp, wp, pp, p.N, p.refine);
            }
            write_output(p.output, kd::to_json(res, mp, wp, pp).dump(2) + "\n");
        } else if (*collisions) {
            auto catalog = kd::enumerate_collisions(
                delta_max, kd::default_tau_grid(tau_points), p.k);
            write_output(p.output, kd::collisions_to_csv(catalog));
        } else if (*band) {
            kd::SweepConfig cfg;
            cfg.hill.N = p.N;
            cfg.hill.refine = p.refine;
            kd::BandEdge e = kd::find_band_edge(mp, wp, cfg);
            write_output(p.output, kd::to_json(e).dump(2) + "\n");
        } else if (*sweep) {
            kd::GridSpec grid;
            grid.rho = parse_list(rho_s);
            grid.phi = parse_list(phi_s);
            grid.k = parse_list(k_s);
            grid.a = parse_list(a_s);
            grid.gamma = parse_list(gamma_s);
            grid.tau = parse_list(tau_s);
            kd::SweepConfig cfg;
            cfg.hill.N = p.N;
            cfg.parallel = !serial;
            auto rows = kd::grid_sweep(grid, cfg);
            int disagree = 0;
            for (const auto& r : rows)
                if (!r.agree) ++disagree;
            write_output(p.output, kd::verdicts_to_csv(rows));
            std::cerr << rows.size() << " points, " << disagree << " disagreements\n";
        } else if (*verify) {
            auto results = kd::run_acceptance(only);
            bool ok = kd::report_acceptance(results);
            return ok ? 0 : 3;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
