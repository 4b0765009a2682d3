#pragma once

#include <Eigen/Dense>
#include <vector>

#include "quadproj/quadric.hpp"

namespace quadproj {

/// Boundary points of a 2D/3D central quadric for external plotting.
struct SampleSet {
    Eigen::MatrixXd points;   // one sample per row, original coordinates
    std::vector<int> branch;  // sheet id per sample
};

/// Parametric samples of the quadric surface. Supports n in {2, 3}:
/// ellipse, hyperbola, ellipsoid, one-sheet and two-sheet hyperboloid.
/// Throws Unsupported for other dimensions.
SampleSet sample_boundary(const StandardForm& sf, int count);

}  // namespace quadproj
