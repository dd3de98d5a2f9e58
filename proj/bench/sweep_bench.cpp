// Compares the OpenMP grid sweep against the serial reference path on a
// moderate verification grid and reports the speedup.

#include <chrono>
#include <cstdio>

#include "kd/sweep.hpp"

int main() {
    kd::GridSpec grid;
    grid.rho = {0.0, 1.0};
    grid.phi = {0.0, 1.0, 2.0};
    grid.k = {0.5, 1.0, 2.0};
    grid.a = {0.02};
    grid.gamma = {0.005, 0.01, 0.05, 0.3};
    grid.tau = {0.0, 0.25};

    kd::SweepConfig cfg;
    using clock = std::chrono::steady_clock;

    auto t0 = clock::now();
    auto serial = kd::grid_sweep_serial(grid, cfg);
    auto t1 = clock::now();
    auto parallel = kd::grid_sweep(grid, cfg);
    auto t2 = clock::now();

    int mismatches = 0;
    for (std::size_t i = 0; i < serial.size(); ++i)
        if (serial[i].numeric_max_re != parallel[i].numeric_max_re ||
            serial[i].agree != parallel[i].agree)
            ++mismatches;

    const double ts = std::chrono::duration<double>(t1 - t0).count();
    const double tp = std::chrono::duration<double>(t2 - t1).count();
    std::printf("points:   %zu\n", serial.size());
    std::printf("workers:  %d\n", kd::effective_workers(cfg));
    std::printf("serial:   %.3f s\n", ts);
    std::printf("parallel: %.3f s\n", tp);
    std::printf("speedup:  %.2fx\n", ts / tp);
    std::printf("result mismatch rows: %d\n", mismatches);
    return mismatches == 0 ? 0 : 1;
}
