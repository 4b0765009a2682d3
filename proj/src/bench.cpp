#include "quadproj/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <vector>

#include "quadproj/projection.hpp"
#include "quadproj/quadric.hpp"
#include "quadproj/spectral.hpp"

namespace quadproj {

namespace {

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const size_t m = v.size() / 2;
    if (v.size() % 2 == 1) {
        return v[m];
    }
    return 0.5 * (v[m - 1] + v[m]);
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

BenchReport run_bench(int n, int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> mag(0.1, 1.0);
    std::uniform_int_distribution<int> coin(0, 1);

    BenchReport rep;
    rep.n = n;
    rep.count = count;
    rep.all_feasible = true;

    std::vector<double> eig_times;
    std::vector<double> solve_times;
    std::vector<double> iters;

    for (int inst = 0; inst < count; ++inst) {
        // random orthogonal basis, eigenvalues on [-1,-0.1] U [0.1,1]
        Eigen::MatrixXd G(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                G(i, j) = gauss(rng);
            }
        }
        const Eigen::MatrixXd V =
            Eigen::HouseholderQR<Eigen::MatrixXd>(G).householderQ();
        Eigen::VectorXd lambda(n);
        for (int i = 0; i < n; ++i) {
            lambda[i] = mag(rng) * (coin(rng) ? 1.0 : -1.0);
        }
        lambda[0] = std::abs(lambda[0]);  // at least one positive eigenvalue

        Eigen::VectorXd d(n);
        Eigen::VectorXd x0(n);
        for (int i = 0; i < n; ++i) {
            d[i] = gauss(rng);
            x0[i] = 2.0 * gauss(rng);
        }

        // gamma = -1: Psi(x) = (x-d)' A (x-d) - 1
        const Eigen::MatrixXd A = V * lambda.asDiagonal() * V.transpose();
        const Eigen::VectorXd b = -2.0 * (A * d);
        const double c = -1.0 + d.dot(A * d);
        const Quadric q(A, b, c);

        const auto t_eig = std::chrono::steady_clock::now();
        const EigenDecomposition ed = eig_sym(q.A());
        eig_times.push_back(seconds_since(t_eig));

        // assemble the standard form from the timed decomposition (gamma = -1,
        // no sign flip by construction)
        StandardForm sf;
        sf.values = ed.values;
        sf.vectors = ed.vectors;
        const Eigen::VectorXd w = sf.vectors.transpose() * q.b();
        sf.center = -0.5 * (sf.vectors * (w.array() / sf.values.array()).matrix());
        sf.gamma = q.c() + 0.5 * q.b().dot(sf.center);
        sf.scale = std::sqrt(std::abs(sf.gamma));
        sf.flipped = false;

        const Eigen::VectorXd y0 = to_std(sf, x0);

        const auto t_solve = std::chrono::steady_clock::now();
        const SecularProblem sp = make_secular_problem(sf.values, y0);
        const StandardizedSolution sol = solve_standardized(sp);
        solve_times.push_back(seconds_since(t_solve));
        iters.push_back(static_cast<double>(sol.newton_iterations));
        rep.max_newton_iterations =
            std::max(rep.max_newton_iterations, sol.newton_iterations);

        const Eigen::VectorXd point = from_std(sf, sol.candidates.front().y);
        if (!q.is_feasible(point)) {
            rep.all_feasible = false;
        }
    }

    double eig_sum = 0.0;
    double solve_sum = 0.0;
    for (double t : eig_times) {
        eig_sum += t;
    }
    for (double t : solve_times) {
        solve_sum += t;
    }
    rep.eig_mean_s = eig_sum / count;
    rep.solve_mean_s = solve_sum / count;
    rep.eig_median_s = median(eig_times);
    rep.solve_median_s = median(solve_times);
    rep.mean_ratio = rep.solve_mean_s > 0.0 ? rep.eig_mean_s / rep.solve_mean_s : 0.0;
    rep.median_newton_iterations = median(iters);
    return rep;
}

}  // namespace quadproj
