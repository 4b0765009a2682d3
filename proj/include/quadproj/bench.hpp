#pragma once

#include <cstdint>

namespace quadproj {

/// Cost decomposition of the projection on random central quadrics:
/// eigendecomposition versus secular root-finding plus candidate selection.
struct BenchReport {
    int n = 0;
    int count = 0;
    double eig_mean_s = 0.0;
    double eig_median_s = 0.0;
    double solve_mean_s = 0.0;
    double solve_median_s = 0.0;
    double mean_ratio = 0.0;  // eig_mean_s / solve_mean_s
    double median_newton_iterations = 0.0;
    int max_newton_iterations = 0;
    bool all_feasible = false;
};

BenchReport run_bench(int n, int count, std::uint64_t seed);

}  // namespace quadproj
