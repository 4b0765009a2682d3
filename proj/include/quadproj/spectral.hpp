#pragma once

#include <Eigen/Dense>
#include <vector>

namespace quadproj {

/// Full symmetric eigendecomposition A = V diag(values) V'.
///
/// values are sorted in descending order. Eigenvector columns carry a fixed
/// sign convention (entry of largest magnitude positive, first such entry on
/// ties) so identical inputs produce identical output.
struct EigenDecomposition {
    Eigen::VectorXd values;   // descending
    Eigen::MatrixXd vectors;  // columns match values
};

/// Partition of eigenvalue indices into maximal blocks of numerically equal
/// values. Blocks are contiguous in the sorted order.
struct EigenGroups {
    std::vector<std::vector<int>> groups;   // index blocks, in sorted order
    std::vector<double> representatives;    // one value per block

    [[nodiscard]] int size() const { return static_cast<int>(groups.size()); }
};

/// Relative symmetry tolerance: 1e-12 * max(1, ||A||_F).
double symmetry_tolerance(const Eigen::MatrixXd& A);

/// Eigendecomposition of a symmetric matrix.
///
/// Throws NotSymmetric if ||A - A'||_F exceeds symmetry_tolerance(A),
/// NoConvergence if the underlying iteration fails.
EigenDecomposition eig_sym(const Eigen::MatrixXd& A);

/// Default grouping tolerance: 1e-9 * max(1, max_k |lambda_k|).
double default_group_tolerance(const Eigen::VectorXd& values);

/// Group a descending eigenvalue vector into blocks of equal values.
/// tau_group < 0 selects the default tolerance.
EigenGroups group_eigenvalues(const Eigen::VectorXd& values, double tau_group = -1.0);

}  // namespace quadproj
