#include "quadproj/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quadproj/errors.hpp"

namespace quadproj {

namespace {

constexpr double kPoleRelTol = 1e-14;
constexpr double kSlackTol = 1e-12;
constexpr int kNewtonCap = 100;

double pole_of(const SecularProblem& sp, int group)
{
    return -1.0 / sp.groups.representatives[static_cast<size_t>(group)];
}

void check_off_active_poles(const SecularProblem& sp, double mu)
{
    for (int g = 0; g < sp.groups.size(); ++g) {
        if (!sp.group_active[static_cast<size_t>(g)]) {
            continue;
        }
        const double p = pole_of(sp, g);
        if (std::abs(mu - p) <= kPoleRelTol * std::max(1.0, std::abs(p))) {
            throw PoleEvaluation("secular function evaluated on an active pole");
        }
    }
}

// No pole check; mathematically finite whenever mu is off the active poles.
double f_sum(const SecularProblem& sp, double mu)
{
    double s = -1.0;
    for (Eigen::Index i = 0; i < sp.values.size(); ++i) {
        if (!sp.entry_active[static_cast<size_t>(i)]) {
            continue;
        }
        const double t = sp.y0[i] / (1.0 + mu * sp.values[i]);
        s += sp.values[i] * t * t;
    }
    return s;
}

int sign_of(double v)
{
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b)
{
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            return a[i] < b[i];
        }
    }
    return false;
}

}  // namespace

SecularProblem make_secular_problem(const Eigen::VectorXd& values,
                                    const Eigen::VectorXd& y0,
                                    const ProjectOptions& opts)
{
    if (values.size() != y0.size() || values.size() < 1) {
        throw Error("make_secular_problem: dimension mismatch");
    }
    if (values[0] <= 0.0) {
        throw EmptyQuadric("make_secular_problem: leading eigenvalue must be positive");
    }

    SecularProblem sp;
    sp.values = values;
    sp.y0 = y0;
    sp.tau_axis = opts.tau_axis_factor * (1.0 + y0.norm());
    sp.groups = group_eigenvalues(values, opts.tau_group);

    const size_t ng = static_cast<size_t>(sp.groups.size());
    sp.entry_active.assign(static_cast<size_t>(y0.size()), 0);
    sp.group_active.assign(ng, 0);
    for (size_t g = 0; g < ng; ++g) {
        for (int i : sp.groups.groups[g]) {
            const bool active = std::abs(y0[i]) > sp.tau_axis;
            sp.entry_active[static_cast<size_t>(i)] = active ? 1 : 0;
            if (active) {
                sp.group_active[g] = 1;
            }
        }
    }
    sp.poles.resize(ng);
    for (size_t g = 0; g < ng; ++g) {
        sp.poles[g] = -1.0 / sp.groups.representatives[g];
    }
    std::sort(sp.poles.begin(), sp.poles.end());
    return sp;
}

double f_value(const SecularProblem& sp, double mu)
{
    check_off_active_poles(sp, mu);
    return f_sum(sp, mu);
}

double f_derivative(const SecularProblem& sp, double mu)
{
    check_off_active_poles(sp, mu);
    double s = 0.0;
    for (Eigen::Index i = 0; i < sp.values.size(); ++i) {
        if (!sp.entry_active[static_cast<size_t>(i)]) {
            continue;
        }
        const double den = 1.0 + mu * sp.values[i];
        const double l = sp.values[i];
        s -= 2.0 * l * l * sp.y0[i] * sp.y0[i] / (den * den * den);
    }
    return s;
}

RootInterval root_interval(const SecularProblem& sp)
{
    const Eigen::Index n = sp.values.size();
    RootInterval ri;
    ri.lower = -1.0 / sp.values[0];
    const double lambda_min = sp.values[n - 1];
    ri.upper = lambda_min < 0.0 ? -1.0 / lambda_min
                                : std::numeric_limits<double>::infinity();

    const int last = sp.groups.size() - 1;
    if (sp.group_active[0]) {
        ri.lower_limit_sign = 1;  // lambda_1 > 0 term blows up to +inf
    } else {
        ri.lower_limit_sign = sign_of(f_sum(sp, ri.lower));
    }

    if (lambda_min < 0.0) {
        if (sp.group_active[static_cast<size_t>(last)]) {
            ri.upper_limit_sign = -1;  // negative eigenvalue term goes to -inf
        } else {
            ri.upper_limit_sign = sign_of(f_sum(sp, ri.upper));
        }
    } else {
        ri.upper_limit_sign = -1;  // f -> -1 as mu -> +inf
    }

    ri.has_root = ri.lower_limit_sign > 0 && ri.upper_limit_sign < 0;
    return ri;
}

NewtonResult newton_root(const SecularProblem& sp, const RootInterval& ri)
{
    if (!ri.has_root) {
        throw Error("newton_root: interval carries no root");
    }

    // Bracket [lo, hi] with f(lo) > 0 > f(hi).
    double lo;
    if (sp.group_active[0]) {
        double off = 1e-8 * (1.0 + std::abs(ri.lower));
        lo = ri.lower + off;
        int guard = 0;
        while (f_sum(sp, lo) <= 0.0) {
            off *= 0.5;
            lo = ri.lower + off;
            if (++guard > 2000) {
                throw MaxIterations("newton_root: cannot bracket at the lower pole");
            }
        }
    } else {
        lo = ri.lower;
    }

    double hi;
    if (!std::isfinite(ri.upper)) {
        hi = std::max(1.0, lo + 1.0);
        int guard = 0;
        while (f_sum(sp, hi) >= 0.0) {
            hi *= 2.0;
            if (++guard > 2000) {
                throw MaxIterations("newton_root: cannot bracket toward +inf");
            }
        }
    } else if (sp.group_active[static_cast<size_t>(sp.groups.size() - 1)]) {
        double off = 1e-8 * (1.0 + std::abs(ri.upper));
        hi = ri.upper - off;
        int guard = 0;
        while (hi <= lo || f_sum(sp, hi) >= 0.0) {
            off *= 0.5;
            hi = ri.upper - off;
            if (++guard > 2000) {
                throw MaxIterations("newton_root: cannot bracket at the upper pole");
            }
        }
    } else {
        hi = ri.upper;
    }

    const double mu0 = std::clamp(0.0, lo, hi);
    const double f_tol = 1e-12 * (1.0 + std::abs(f_sum(sp, mu0)));

    double mu = mu0;
    int it = 0;
    while (it < kNewtonCap) {
        ++it;
        const double fv = f_sum(sp, mu);
        if (fv > 0.0) {
            lo = mu;
        } else if (fv < 0.0) {
            hi = mu;
        } else {
            return {mu, it};
        }

        const double fd = f_derivative(sp, mu);
        if (std::abs(fv) <= f_tol) {
            // one polishing step squeezes out the last digits
            if (fd < -1e-300) {
                const double polished = mu - fv / fd;
                if (polished > lo && polished < hi) {
                    mu = polished;
                }
            }
            return {mu, it};
        }
        if (hi - lo <= 1e-14 * (1.0 + std::abs(mu))) {
            return {mu, it};
        }

        double next = std::numeric_limits<double>::quiet_NaN();
        if (fd < -1e-300) {
            next = mu - fv / fd;
        }
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        mu = next;
    }
    throw MaxIterations("newton_root: iteration cap reached");
}

Eigen::VectorXd x_of_mu(const SecularProblem& sp, double mu)
{
    check_off_active_poles(sp, mu);
    Eigen::VectorXd y = Eigen::VectorXd::Zero(sp.values.size());
    for (Eigen::Index i = 0; i < sp.values.size(); ++i) {
        if (sp.entry_active[static_cast<size_t>(i)]) {
            y[i] = sp.y0[i] / (1.0 + mu * sp.values[i]);
        }
    }
    return y;
}

std::vector<Candidate> degenerate_candidates(const SecularProblem& sp)
{
    std::vector<Candidate> out;
    for (int g = 0; g < sp.groups.size(); ++g) {
        if (sp.group_active[static_cast<size_t>(g)]) {
            continue;
        }
        const double lambda_bar = sp.groups.representatives[static_cast<size_t>(g)];
        const double mu_g = -1.0 / lambda_bar;

        Eigen::VectorXd y = Eigen::VectorXd::Zero(sp.values.size());
        double constraint_sum = 0.0;
        for (Eigen::Index i = 0; i < sp.values.size(); ++i) {
            if (!sp.entry_active[static_cast<size_t>(i)]) {
                continue;
            }
            y[i] = sp.y0[i] / (1.0 + mu_g * sp.values[i]);
            constraint_sum += sp.values[i] * y[i] * y[i];
        }
        const double slack = 1.0 - constraint_sum;
        const double ratio = slack / lambda_bar;
        if (ratio < -kSlackTol) {
            continue;  // pole branch has no real point on the quadric
        }
        const int i0 = sp.groups.groups[static_cast<size_t>(g)][0];
        const double amp = std::sqrt(std::max(0.0, ratio));
        for (int s : {+1, -1}) {
            Candidate cand;
            cand.y = y;
            cand.y[i0] = s * amp;
            cand.mu = mu_g;
            cand.kind = CandidateKind::Degenerate;
            cand.group = g;
            cand.sign_branch = s;
            cand.dist2 = (cand.y - sp.y0).squaredNorm();
            out.push_back(std::move(cand));
        }
    }
    return out;
}

double kkt_residual(const SecularProblem& sp, const Eigen::VectorXd& y, double mu)
{
    const Eigen::VectorXd dy = sp.values.cwiseProduct(y);
    const Eigen::VectorXd stationarity = 2.0 * (y - sp.y0) + 2.0 * mu * dy;
    const double feasibility = y.dot(dy) - 1.0;
    const double norm =
        std::sqrt(stationarity.squaredNorm() + feasibility * feasibility);
    return norm / (1.0 + sp.y0.norm());
}

StandardizedSolution solve_standardized(const SecularProblem& sp)
{
    StandardizedSolution sol;
    sol.candidates = degenerate_candidates(sp);
    sol.degenerate = !sol.candidates.empty();
    sol.newton_iterations = 0;
    sol.root_found = false;

    const RootInterval ri = root_interval(sp);
    if (ri.has_root) {
        const NewtonResult nr = newton_root(sp, ri);
        Candidate cand;
        cand.y = x_of_mu(sp, nr.mu);
        cand.mu = nr.mu;
        cand.kind = CandidateKind::NewtonRoot;
        cand.group = -1;
        cand.sign_branch = 0;
        cand.dist2 = (cand.y - sp.y0).squaredNorm();
        sol.candidates.push_back(std::move(cand));
        sol.newton_iterations = nr.iterations;
        sol.root_found = true;
    }

    if (sol.candidates.empty()) {
        throw InternalNoCandidate("solve_standardized: empty candidate set");
    }
    std::sort(sol.candidates.begin(), sol.candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                  if (a.dist2 != b.dist2) {
                      return a.dist2 < b.dist2;
                  }
                  if (a.kind != b.kind) {
                      return a.kind == CandidateKind::NewtonRoot;
                  }
                  return lex_less(a.y, b.y);
              });
    return sol;
}

ProjectionResult project(const StandardForm& sf, const Eigen::VectorXd& x0,
                         const ProjectOptions& opts)
{
    const Eigen::VectorXd y0 = to_std(sf, x0);
    const SecularProblem sp = make_secular_problem(sf.values, y0, opts);
    StandardizedSolution sol = solve_standardized(sp);

    const Candidate& best = sol.candidates.front();
    ProjectionResult res;
    res.point = from_std(sf, best.y);
    res.distance = (res.point - x0).norm();
    res.multiplier = best.mu;
    res.degenerate = sol.degenerate;
    res.newton_iterations = sol.newton_iterations;
    res.candidates = std::move(sol.candidates);
    return res;
}

ProjectionResult project(const Quadric& q, const Eigen::VectorXd& x0,
                         const ProjectOptions& opts)
{
    return project(standardize(q), x0, opts);
}

Eigen::VectorXd project_hyperplane(const Eigen::VectorXd& bvec, double c,
                                   const Eigen::VectorXd& x0)
{
    const double nrm2 = bvec.squaredNorm();
    if (nrm2 == 0.0) {
        throw ZeroNormal("project_hyperplane: normal vector is zero");
    }
    return x0 - ((bvec.dot(x0) + c) / nrm2) * bvec;
}

}  // namespace quadproj
