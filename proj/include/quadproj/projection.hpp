#pragma once

#include <Eigen/Dense>
#include <vector>

#include "quadproj/quadric.hpp"
#include "quadproj/spectral.hpp"

namespace quadproj {

/// The univariate root-finding problem behind a standardized projection:
/// find mu with f(mu) = sum_{i active} values_i (y0_i / (1 + mu values_i))^2 - 1 = 0.
///
/// Entries of y0 below the axis tolerance are treated as exactly zero and
/// never contribute to f; they decide which pole branches are degenerate.
struct SecularProblem {
    Eigen::VectorXd values;          // descending, all nonzero, values[0] > 0
    Eigen::VectorXd y0;              // standardized point to project
    EigenGroups groups;
    std::vector<double> poles;       // -1/representative, ascending
    std::vector<char> group_active;  // group has an entry with |y0_i| > tau_axis
    std::vector<char> entry_active;  // |y0_i| > tau_axis
    double tau_axis;
};

struct ProjectOptions {
    double tau_axis_factor = 1e-11;  // tau_axis = factor * (1 + ||y0||)
    double tau_feas = 1e-8;
    double tau_group = -1.0;         // < 0: default from the eigenvalues
};

SecularProblem make_secular_problem(const Eigen::VectorXd& values,
                                    const Eigen::VectorXd& y0,
                                    const ProjectOptions& opts = {});

/// Open interval holding the distinguished root of f, with the signs of the
/// one-sided limits at its endpoints.
struct RootInterval {
    double lower;         // -1/values[0]
    double upper;         // -1/values[n-1] if it is negative, else +inf
    int lower_limit_sign; // sign of lim f at lower+ (+1, -1, or 0)
    int upper_limit_sign; // sign of lim f at upper-
    bool has_root;
};

double f_value(const SecularProblem& sp, double mu);
double f_derivative(const SecularProblem& sp, double mu);
RootInterval root_interval(const SecularProblem& sp);

struct NewtonResult {
    double mu;
    int iterations;
};

/// Safeguarded Newton for the unique root of f inside ri. Requires has_root.
/// Throws MaxIterations after 100 steps.
NewtonResult newton_root(const SecularProblem& sp, const RootInterval& ri);

/// y_i = y0_i / (1 + mu values_i); inactive entries are exactly zero.
/// Throws PoleEvaluation when mu sits on an active pole.
Eigen::VectorXd x_of_mu(const SecularProblem& sp, double mu);

enum class CandidateKind { NewtonRoot, Degenerate };

/// A KKT point of the standardized problem.
struct Candidate {
    Eigen::VectorXd y;
    double mu;
    CandidateKind kind;
    int group;        // degenerate branch: eigenvalue group index, else -1
    int sign_branch;  // degenerate branch: +1 or -1, else 0
    double dist2;     // ||y - y0||^2
};

/// Closed-form KKT points at poles whose whole eigenvalue group of y0
/// vanishes. Empty when no such group exists.
std::vector<Candidate> degenerate_candidates(const SecularProblem& sp);

/// Scaled residual of the KKT system at (y, mu):
/// ||(2(y - y0) + 2 mu D y, y'Dy - 1)|| / (1 + ||y0||).
double kkt_residual(const SecularProblem& sp, const Eigen::VectorXd& y, double mu);

/// Full standardized solve: Newton root (when it exists) plus degenerate
/// branches, sorted so the selected candidate comes first.
struct StandardizedSolution {
    std::vector<Candidate> candidates;  // sorted: dist2, NewtonRoot first, lex y
    int newton_iterations;
    bool root_found;
    bool degenerate;  // at least one degenerate branch was emitted
};

StandardizedSolution solve_standardized(const SecularProblem& sp);

struct ProjectionResult {
    Eigen::VectorXd point;  // projection in original coordinates
    double distance;
    double multiplier;
    bool degenerate;
    int newton_iterations;
    std::vector<Candidate> candidates;  // standardized coordinates, sorted
};

/// Project x0 onto a non-cylindrical central quadric.
/// Propagates standardize() errors.
ProjectionResult project(const Quadric& q, const Eigen::VectorXd& x0,
                         const ProjectOptions& opts = {});

/// Same, reusing an already computed StandardForm.
ProjectionResult project(const StandardForm& sf, const Eigen::VectorXd& x0,
                         const ProjectOptions& opts = {});

/// Closed-form projection onto { x : <bvec, x> + c = 0 }.
/// Throws ZeroNormal.
Eigen::VectorXd project_hyperplane(const Eigen::VectorXd& bvec, double c,
                                   const Eigen::VectorXd& x0);

}  // namespace quadproj
