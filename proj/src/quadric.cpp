#include "quadproj/quadric.hpp"

#include <algorithm>
#include <cmath>

#include "quadproj/errors.hpp"

namespace quadproj {

Quadric::Quadric(Eigen::MatrixXd A, Eigen::VectorXd b, double c)
    : A_(std::move(A)), b_(std::move(b)), c_(c)
{
    if (A_.rows() != A_.cols() || A_.rows() != b_.size() || A_.rows() < 1) {
        throw Error("Quadric: dimension mismatch");
    }
    if ((A_ - A_.transpose()).norm() > symmetry_tolerance(A_)) {
        throw NotSymmetric("Quadric: A is not symmetric within tolerance");
    }
    A_ = 0.5 * (A_ + A_.transpose()).eval();
    if (A_.norm() == 0.0) {
        throw ZeroQuadratic("Quadric: A is zero, Psi is not quadratic");
    }
}

double Quadric::evaluate(const Eigen::VectorXd& x) const
{
    return x.dot(A_ * x) + b_.dot(x) + c_;
}

bool Quadric::is_feasible(const Eigen::VectorXd& x, double tau_feas) const
{
    const double quad = x.dot(A_ * x);
    const double lin = b_.dot(x);
    const double scale = std::max({1.0, std::abs(quad), std::abs(lin), std::abs(c_)});
    return std::abs(quad + lin + c_) <= tau_feas * scale;
}

namespace {

constexpr double kRankFactor = 1e-10;

int rank_from_singular_values(const Eigen::VectorXd& sv)
{
    if (sv.size() == 0) {
        return 0;
    }
    const double thresh = kRankFactor * sv.maxCoeff();
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv[i] > thresh) {
            ++r;
        }
    }
    return r;
}

int matrix_rank(const Eigen::MatrixXd& M)
{
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    return rank_from_singular_values(svd.singularValues());
}

}  // namespace

QuadricClass classify(const Quadric& q)
{
    const int n = q.dim();
    const EigenDecomposition ed = eig_sym(q.A());

    const double lmax = ed.values.cwiseAbs().maxCoeff();
    const double thresh = kRankFactor * lmax;
    int rank_A = 0;
    int positives = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(ed.values[i]) > thresh) {
            ++rank_A;
        }
        if (ed.values[i] > thresh) {
            ++positives;
        }
    }

    Eigen::MatrixXd Astar(n + 1, n + 1);
    Astar(0, 0) = q.c();
    Astar.block(0, 1, 1, n) = 0.5 * q.b().transpose();
    Astar.block(1, 0, n, 1) = 0.5 * q.b();
    Astar.block(1, 1, n, n) = q.A();

    Eigen::MatrixXd Ab(n, n + 1);
    Ab.leftCols(n) = q.A();
    Ab.col(n) = 0.5 * q.b();

    QuadricClass out;
    out.rank_A = rank_A;
    out.positives = positives;
    out.rank_Astar = matrix_rank(Astar);
    out.rank_Ab = matrix_rank(Ab);

    if (out.rank_Ab > rank_A) {
        out.kind = QuadricKind::Parabolic;
        out.cylindrical = rank_A < n - 1;
    } else if (out.rank_Astar > out.rank_Ab) {
        out.kind = QuadricKind::Central;
        out.cylindrical = rank_A < n;
    } else {
        out.kind = QuadricKind::Conical;
        out.cylindrical = rank_A < n;
    }
    return out;
}

const char* to_string(QuadricKind kind)
{
    switch (kind) {
        case QuadricKind::Conical: return "conical";
        case QuadricKind::Central: return "central";
        case QuadricKind::Parabolic: return "parabolic";
    }
    return "unknown";
}

StandardForm standardize(const Quadric& q)
{
    const int n = q.dim();
    EigenDecomposition ed = eig_sym(q.A());

    const double lmax = ed.values.cwiseAbs().maxCoeff();
    const double lmin = ed.values.cwiseAbs().minCoeff();
    if (lmin <= kRankFactor * lmax) {
        throw NotCentral("standardize: A is singular, the quadric has no unique center");
    }

    // d = -A^{-1} b / 2 through the eigenbasis
    const Eigen::VectorXd w = ed.vectors.transpose() * q.b();
    const Eigen::VectorXd center =
        -0.5 * (ed.vectors * (w.array() / ed.values.array()).matrix());

    // gamma = Psi(d) = c + b'd/2
    const double gamma = q.c() + 0.5 * q.b().dot(center);
    const double bnorm2 = q.b().squaredNorm();
    const double gamma_scale = std::max({1.0, std::abs(q.c()), bnorm2 / q.A().norm()});
    if (std::abs(gamma) <= 1e-12 * gamma_scale) {
        throw ConicalDegenerate("standardize: gamma = 0, conical quadric");
    }

    StandardForm sf;
    sf.center = center;
    sf.flipped = gamma > 0.0;
    sf.gamma = -std::abs(gamma);
    sf.scale = std::sqrt(std::abs(gamma));
    if (sf.flipped) {
        // eigenpairs of -A: negate and reverse to restore descending order
        sf.values = (-ed.values).reverse();
        sf.vectors.resize(n, n);
        for (int j = 0; j < n; ++j) {
            sf.vectors.col(j) = ed.vectors.col(n - 1 - j);
        }
    } else {
        sf.values = std::move(ed.values);
        sf.vectors = std::move(ed.vectors);
    }

    if (sf.values[0] <= 0.0) {
        throw EmptyQuadric("standardize: no positive eigenvalue, the quadric is empty");
    }
    return sf;
}

Eigen::VectorXd to_std(const StandardForm& sf, const Eigen::VectorXd& x)
{
    return sf.vectors.transpose() * (x - sf.center) / sf.scale;
}

Eigen::VectorXd from_std(const StandardForm& sf, const Eigen::VectorXd& y)
{
    return sf.scale * (sf.vectors * y) + sf.center;
}

}  // namespace quadproj
