#include "quadproj/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "quadproj/errors.hpp"

namespace quadproj {

namespace {

struct ActiveGroup {
    double lambda;
    double weight;  // sum of y0_i^2 over active entries of the group
};

// P(mu) = sum_g lambda_g w_g prod_{h != g}(1 + mu lambda_h)^2
//         - prod_h (1 + mu lambda_h)^2,
// the secular function with denominators cleared over the active groups.
double poly_value(const std::vector<ActiveGroup>& gs, double mu)
{
    const size_t m = gs.size();
    std::vector<double> factor(m);
    double full = 1.0;
    for (size_t h = 0; h < m; ++h) {
        const double t = 1.0 + mu * gs[h].lambda;
        factor[h] = t * t;
        full *= factor[h];
    }
    double s = -full;
    for (size_t g = 0; g < m; ++g) {
        double partial = gs[g].lambda * gs[g].weight;
        for (size_t h = 0; h < m; ++h) {
            if (h != g) {
                partial *= factor[h];
            }
        }
        s += partial;
    }
    return s;
}

double bisect_root(const std::vector<ActiveGroup>& gs, double a, double b)
{
    double fa = poly_value(gs, a);
    for (int k = 0; k < 200; ++k) {
        const double mid = 0.5 * (a + b);
        if (mid == a || mid == b) {
            break;
        }
        const double fm = poly_value(gs, mid);
        if (fm == 0.0) {
            return mid;
        }
        if ((fa > 0.0) == (fm > 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

OracleResult oracle_project_secular(const SecularProblem& sp, const OracleOptions& opts)
{
    const Eigen::Index n = sp.values.size();
    if (n > 12) {
        throw CostGuard("oracle_project_secular: n > 12");
    }

    std::vector<ActiveGroup> gs;
    for (int g = 0; g < sp.groups.size(); ++g) {
        if (!sp.group_active[static_cast<size_t>(g)]) {
            continue;
        }
        ActiveGroup ag;
        ag.lambda = sp.groups.representatives[static_cast<size_t>(g)];
        ag.weight = 0.0;
        for (int i : sp.groups.groups[static_cast<size_t>(g)]) {
            if (sp.entry_active[static_cast<size_t>(i)]) {
                ag.weight += sp.y0[i] * sp.y0[i];
            }
        }
        gs.push_back(ag);
    }

    OracleResult out;
    out.best_dist2 = std::numeric_limits<double>::infinity();
    out.root_count = 0;

    if (!gs.empty()) {
        // every root of f lies within this margin of some pole
        const double lmax = sp.values.cwiseAbs().maxCoeff();
        const double lmin = sp.values.cwiseAbs().minCoeff();
        const double reach = 1.0 + std::sqrt(static_cast<double>(n) * lmax) * sp.y0.norm();
        const double margin = opts.range_factor * reach / lmin;

        double pole_lo = std::numeric_limits<double>::infinity();
        double pole_hi = -std::numeric_limits<double>::infinity();
        for (const ActiveGroup& ag : gs) {
            const double p = -1.0 / ag.lambda;
            pole_lo = std::min(pole_lo, p);
            pole_hi = std::max(pole_hi, p);
        }
        const double lo = pole_lo - margin;
        const double hi = pole_hi + margin;

        std::vector<double> roots;
        const int m = opts.grid_points;
        double prev_mu = lo;
        double prev_val = poly_value(gs, prev_mu);
        for (int k = 1; k <= m; ++k) {
            const double mu = lo + (hi - lo) * static_cast<double>(k) / m;
            const double val = poly_value(gs, mu);
            if (prev_val == 0.0) {
                roots.push_back(prev_mu);
            } else if (val != 0.0 && (prev_val > 0.0) != (val > 0.0)) {
                roots.push_back(bisect_root(gs, prev_mu, mu));
            }
            prev_mu = mu;
            prev_val = val;
        }
        out.root_count = static_cast<int>(roots.size());

        for (double mu : roots) {
            // roots essentially on a pole belong to the degenerate enumeration
            bool on_pole = false;
            for (const ActiveGroup& ag : gs) {
                const double p = -1.0 / ag.lambda;
                if (std::abs(mu - p) <= 1e-13 * std::max(1.0, std::abs(p))) {
                    on_pole = true;
                    break;
                }
            }
            if (on_pole) {
                continue;
            }
            const Eigen::VectorXd y = x_of_mu(sp, mu);
            const double d2 = (y - sp.y0).squaredNorm();
            if (d2 < out.best_dist2) {
                out.best_dist2 = d2;
                out.best_y = y;
            }
        }
    }

    for (const Candidate& cand : degenerate_candidates(sp)) {
        if (cand.dist2 < out.best_dist2) {
            out.best_dist2 = cand.dist2;
            out.best_y = cand.y;
        }
    }

    if (!std::isfinite(out.best_dist2)) {
        throw InternalNoCandidate("oracle_project_secular: no KKT point found");
    }
    return out;
}

Param2dResult oracle_project_param2d(const Quadric& q, const Eigen::VectorXd& x0,
                                     long samples)
{
    if (q.dim() != 2) {
        throw Unsupported("oracle_project_param2d: n must be 2");
    }
    const StandardForm sf = standardize(q);
    const Eigen::VectorXd y0 = to_std(sf, x0);
    const double l1 = sf.values[0];
    const double l2 = sf.values[1];
    samples = std::max<long>(samples, 1000);

    // distance in standardized coordinates as a function of the parameter;
    // branch selects the hyperbola sheet (sign of the cosh coordinate)
    auto point_at = [&](double t, int branch) -> Eigen::Vector2d {
        Eigen::Vector2d y;
        if (l2 > 0.0) {
            y << std::cos(t) / std::sqrt(l1), std::sin(t) / std::sqrt(l2);
        } else {
            const double s = branch == 0 ? 1.0 : -1.0;
            y << s * std::cosh(t) / std::sqrt(l1), std::sinh(t) / std::sqrt(-l2);
        }
        return y;
    };
    auto dist2_at = [&](double t, int branch) {
        return (point_at(t, branch) - Eigen::Vector2d(y0)).squaredNorm();
    };

    double t_lo;
    double t_hi;
    int branches;
    if (l2 > 0.0) {
        t_lo = 0.0;
        t_hi = 2.0 * M_PI;
        branches = 1;
    } else {
        const double reach = std::asinh(10.0 * (1.0 + y0.norm()) * std::sqrt(-l2));
        t_lo = -reach;
        t_hi = reach;
        branches = 2;
    }

    double best_t = t_lo;
    int best_branch = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    const long per_branch = samples / branches;
    for (int br = 0; br < branches; ++br) {
        for (long k = 0; k < per_branch; ++k) {
            const double t = t_lo + (t_hi - t_lo) * static_cast<double>(k) / per_branch;
            const double d2 = dist2_at(t, br);
            if (d2 < best_d2) {
                best_d2 = d2;
                best_t = t;
                best_branch = br;
            }
        }
    }

    // golden-section polish around the winning sample
    const double step = (t_hi - t_lo) / per_branch;
    double a = best_t - step;
    double b = best_t + step;
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = dist2_at(c, best_branch);
    double fd = dist2_at(d, best_branch);
    for (int k = 0; k < 20; ++k) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = dist2_at(c, best_branch);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = dist2_at(d, best_branch);
        }
    }
    best_t = fc < fd ? c : d;

    Param2dResult out;
    out.best_x = from_std(sf, point_at(best_t, best_branch));
    out.best_dist = (out.best_x - x0).norm();
    return out;
}

}  // namespace quadproj
