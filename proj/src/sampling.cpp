#include "quadproj/sampling.hpp"

#include <cmath>

#include "quadproj/errors.hpp"

namespace quadproj {

namespace {

// parameter reach for the unbounded (cosh/sinh) directions
constexpr double kHyperbolicReach = 3.0;  // sinh(3) ~ 10 axis lengths

void append(std::vector<Eigen::VectorXd>& rows, std::vector<int>& branch,
            const StandardForm& sf, const Eigen::VectorXd& y, int id)
{
    rows.push_back(from_std(sf, y));
    branch.push_back(id);
}

}  // namespace

SampleSet sample_boundary(const StandardForm& sf, int count)
{
    const int n = sf.dim();
    if (n != 2 && n != 3) {
        throw Unsupported("sample_boundary: only n = 2 and n = 3 are supported");
    }
    if (count < 4) {
        count = 4;
    }

    std::vector<Eigen::VectorXd> rows;
    std::vector<int> branch;
    const Eigen::VectorXd& l = sf.values;

    if (n == 2) {
        if (l[1] > 0.0) {
            // ellipse
            for (int k = 0; k < count; ++k) {
                const double th = 2.0 * M_PI * k / count;
                Eigen::Vector2d y(std::cos(th) / std::sqrt(l[0]),
                                  std::sin(th) / std::sqrt(l[1]));
                append(rows, branch, sf, y, 0);
            }
        } else {
            // hyperbola, two branches
            const int per = std::max(2, count / 2);
            for (int br = 0; br < 2; ++br) {
                const double s = br == 0 ? 1.0 : -1.0;
                for (int k = 0; k < per; ++k) {
                    const double t =
                        -kHyperbolicReach + 2.0 * kHyperbolicReach * k / (per - 1);
                    Eigen::Vector2d y(s * std::cosh(t) / std::sqrt(l[0]),
                                      std::sinh(t) / std::sqrt(-l[1]));
                    append(rows, branch, sf, y, br);
                }
            }
        }
    } else {
        const int m = std::max(2, static_cast<int>(std::ceil(std::sqrt(count))));
        if (l[2] > 0.0) {
            // ellipsoid: spherical angle grid
            for (int i = 0; i < m; ++i) {
                const double phi = M_PI * (i + 0.5) / m;
                for (int j = 0; j < m; ++j) {
                    const double th = 2.0 * M_PI * j / m;
                    Eigen::Vector3d y(std::sin(phi) * std::cos(th) / std::sqrt(l[0]),
                                      std::sin(phi) * std::sin(th) / std::sqrt(l[1]),
                                      std::cos(phi) / std::sqrt(l[2]));
                    append(rows, branch, sf, y, 0);
                }
            }
        } else if (l[1] > 0.0) {
            // one-sheet hyperboloid: (theta, t) grid
            for (int i = 0; i < m; ++i) {
                const double t = -kHyperbolicReach + 2.0 * kHyperbolicReach * i / (m - 1);
                for (int j = 0; j < m; ++j) {
                    const double th = 2.0 * M_PI * j / m;
                    Eigen::Vector3d y(std::cosh(t) * std::cos(th) / std::sqrt(l[0]),
                                      std::cosh(t) * std::sin(th) / std::sqrt(l[1]),
                                      std::sinh(t) / std::sqrt(-l[2]));
                    append(rows, branch, sf, y, 0);
                }
            }
        } else {
            // two-sheet hyperboloid: radial cosh term, one sheet per sign
            for (int br = 0; br < 2; ++br) {
                const double s = br == 0 ? 1.0 : -1.0;
                for (int i = 0; i < m; ++i) {
                    const double t = kHyperbolicReach * i / (m - 1);
                    for (int j = 0; j < m; ++j) {
                        const double th = 2.0 * M_PI * j / m;
                        Eigen::Vector3d y(
                            s * std::cosh(t) / std::sqrt(l[0]),
                            std::sinh(t) * std::cos(th) / std::sqrt(-l[1]),
                            std::sinh(t) * std::sin(th) / std::sqrt(-l[2]));
                        append(rows, branch, sf, y, br);
                    }
                }
            }
        }
    }

    SampleSet out;
    out.points.resize(static_cast<Eigen::Index>(rows.size()), n);
    for (size_t i = 0; i < rows.size(); ++i) {
        out.points.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    }
    out.branch = std::move(branch);
    return out;
}

}  // namespace quadproj
