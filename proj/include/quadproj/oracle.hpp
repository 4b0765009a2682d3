#pragma once

#include <Eigen/Dense>

#include "quadproj/projection.hpp"

namespace quadproj {

/// Brute-force verifiers. Slow by design; used by tests and the CLI
/// self-check, never by the fast path.

struct OracleResult {
    Eigen::VectorXd best_y;  // standardized coordinates
    double best_dist2;       // squared distance in standardized coordinates
    int root_count;          // real roots of the cleared-denominator polynomial
};

struct OracleOptions {
    int grid_points = 100000;
    double range_factor = 10.0;
};

/// Exhaustive KKT enumeration: clears the secular function's denominators
/// into a polynomial, finds every real root by sign scan plus bisection,
/// unions the degenerate branches, and returns the closest point.
/// Throws CostGuard for n > 12.
OracleResult oracle_project_secular(const SecularProblem& sp,
                                    const OracleOptions& opts = {});

struct Param2dResult {
    Eigen::VectorXd best_x;  // original coordinates
    double best_dist;
};

/// Dense parametric sampling of a 2D central quadric (ellipse or hyperbola),
/// polished with golden-section steps on the parameter.
/// Throws Unsupported for n != 2 or unsupported type.
Param2dResult oracle_project_param2d(const Quadric& q, const Eigen::VectorXd& x0,
                                     long samples = 1000000);

}  // namespace quadproj
