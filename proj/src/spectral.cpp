#include "quadproj/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "quadproj/errors.hpp"

namespace quadproj {

double symmetry_tolerance(const Eigen::MatrixXd& A)
{
    return 1e-12 * std::max(1.0, A.norm());
}

namespace {

// Largest-magnitude entry of each column made positive; first such entry on ties.
void fix_column_signs(Eigen::MatrixXd& V)
{
    for (Eigen::Index j = 0; j < V.cols(); ++j) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < V.rows(); ++i) {
            const double m = std::abs(V(i, j));
            if (m > best) {
                best = m;
                imax = i;
            }
        }
        if (V(imax, j) < 0.0) {
            V.col(j) = -V.col(j);
        }
    }
}

}  // namespace

EigenDecomposition eig_sym(const Eigen::MatrixXd& A)
{
    if (A.rows() != A.cols() || A.rows() < 1) {
        throw Error("eig_sym: matrix must be square, n >= 1");
    }
    if ((A - A.transpose()).norm() > symmetry_tolerance(A)) {
        throw NotSymmetric("eig_sym: matrix is not symmetric within tolerance");
    }
    const Eigen::MatrixXd S = 0.5 * (A + A.transpose());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(S);
    if (solver.info() != Eigen::Success) {
        throw NoConvergence("eig_sym: eigensolver did not converge");
    }

    const Eigen::Index n = S.rows();
    EigenDecomposition out;
    out.values = solver.eigenvalues().reverse();
    out.vectors.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        out.vectors.col(j) = solver.eigenvectors().col(n - 1 - j);
    }
    // reversing flipped the column order inside blocks of exactly equal
    // eigenvalues; restore the solver's order there (identity stays identity)
    Eigen::Index i = 0;
    while (i < n) {
        Eigen::Index j = i;
        while (j + 1 < n && out.values[j + 1] == out.values[i]) {
            ++j;
        }
        for (Eigen::Index a = i, b = j; a < b; ++a, --b) {
            out.vectors.col(a).swap(out.vectors.col(b));
        }
        i = j + 1;
    }
    fix_column_signs(out.vectors);
    return out;
}

double default_group_tolerance(const Eigen::VectorXd& values)
{
    const double vmax = values.size() > 0 ? values.cwiseAbs().maxCoeff() : 0.0;
    return 1e-9 * std::max(1.0, vmax);
}

EigenGroups group_eigenvalues(const Eigen::VectorXd& values, double tau_group)
{
    if (tau_group < 0.0) {
        tau_group = default_group_tolerance(values);
    }
    EigenGroups out;
    const int n = static_cast<int>(values.size());
    int i = 0;
    while (i < n) {
        std::vector<int> block{i};
        int j = i + 1;
        // values are descending, so the adjacent gap decides the block boundary
        while (j < n && std::abs(values[j - 1] - values[j]) <= tau_group) {
            block.push_back(j);
            ++j;
        }
        double rep = 0.0;
        for (int k : block) {
            rep += values[k];
        }
        rep /= static_cast<double>(block.size());
        out.representatives.push_back(rep);
        out.groups.push_back(std::move(block));
        i = j;
    }
    return out;
}

}  // namespace quadproj
