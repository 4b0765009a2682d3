#pragma once

#include <Eigen/Dense>

#include "quadproj/spectral.hpp"

namespace quadproj {

/// The hypersurface { x : x'Ax + b'x + c = 0 } with A symmetric and nonzero.
class Quadric {
public:
    /// Validates dimensions, symmetrizes A within tolerance, rejects A = 0.
    /// Throws NotSymmetric or ZeroQuadratic.
    Quadric(Eigen::MatrixXd A, Eigen::VectorXd b, double c);

    [[nodiscard]] const Eigen::MatrixXd& A() const { return A_; }
    [[nodiscard]] const Eigen::VectorXd& b() const { return b_; }
    [[nodiscard]] double c() const { return c_; }
    [[nodiscard]] int dim() const { return static_cast<int>(b_.size()); }

    /// Psi(x) = x'Ax + b'x + c.
    [[nodiscard]] double evaluate(const Eigen::VectorXd& x) const;

    /// |Psi(x)| <= tau_feas * max(1, |x'Ax|, |b'x|, |c|).
    [[nodiscard]] bool is_feasible(const Eigen::VectorXd& x, double tau_feas = 1e-8) const;

private:
    Eigen::MatrixXd A_;
    Eigen::VectorXd b_;
    double c_;
};

enum class QuadricKind { Conical, Central, Parabolic };

/// Rank-based classification record.
struct QuadricClass {
    QuadricKind kind;
    bool cylindrical;
    int rank_A;      // r
    int positives;   // p, eigenvalues above the rank threshold
    int rank_Astar;  // extended (n+1)x(n+1) matrix
    int rank_Ab;     // n x (n+1) block [A | b/2]
};

QuadricClass classify(const Quadric& q);

const char* to_string(QuadricKind kind);

/// Everything needed for the standardizing transform and its inverse:
/// y = V'(x - center)/scale maps the quadric onto sum_i values_i y_i^2 = 1.
///
/// gamma is stored after sign normalization and is always negative. When the
/// input signs had gamma > 0, (A, b, c) were negated first and flipped is set.
struct StandardForm {
    Eigen::VectorXd values;   // eigenvalues of the (possibly negated) A, descending
    Eigen::MatrixXd vectors;  // orthogonal basis V
    Eigen::VectorXd center;   // d = -A^{-1} b / 2
    double gamma = 0.0;       // normalized, < 0
    double scale = 1.0;       // sqrt(|gamma|)
    bool flipped = false;

    [[nodiscard]] int dim() const { return static_cast<int>(values.size()); }
};

/// Standardize a non-cylindrical central quadric.
/// Throws NotCentral, ConicalDegenerate, EmptyQuadric.
StandardForm standardize(const Quadric& q);

/// y = V'(x - center)/scale.
Eigen::VectorXd to_std(const StandardForm& sf, const Eigen::VectorXd& x);

/// x = scale * V y + center.
Eigen::VectorXd from_std(const StandardForm& sf, const Eigen::VectorXd& y);

}  // namespace quadproj
