#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "quadproj/errors.hpp"
#include "quadproj/quadric.hpp"
#include "quadproj/sampling.hpp"

using namespace quadproj;

namespace {

Quadric diag_quadric(const Eigen::VectorXd& diag, double c = -1.0)
{
    return Quadric(Eigen::MatrixXd(diag.asDiagonal()),
                   Eigen::VectorXd::Zero(diag.size()), c);
}

void check_all_feasible(const Quadric& q, const SampleSet& set)
{
    for (Eigen::Index i = 0; i < set.points.rows(); ++i) {
        CHECK(q.is_feasible(set.points.row(i).transpose(), 1e-6));
    }
}

}  // namespace

TEST_CASE("circle samples hit the four compass points")
{
    const Quadric q = diag_quadric(Eigen::Vector2d(1, 1));
    const auto set = sample_boundary(standardize(q), 4);
    REQUIRE(set.points.rows() == 4);
    CHECK((set.points.row(0).transpose() - Eigen::Vector2d(1, 0)).norm() < 1e-12);
    CHECK((set.points.row(1).transpose() - Eigen::Vector2d(0, 1)).norm() < 1e-12);
    CHECK((set.points.row(2).transpose() - Eigen::Vector2d(-1, 0)).norm() < 1e-12);
    CHECK((set.points.row(3).transpose() - Eigen::Vector2d(0, -1)).norm() < 1e-12);
}

TEST_CASE("ellipse samples are feasible")
{
    const Quadric q = diag_quadric(Eigen::Vector2d(0.25, 1));
    check_all_feasible(q, sample_boundary(standardize(q), 256));
}

TEST_CASE("hyperbola emits two branches, all feasible")
{
    const Quadric q = diag_quadric(Eigen::Vector2d(1, -1));
    const auto set = sample_boundary(standardize(q), 100);
    check_all_feasible(q, set);
    CHECK(std::count(set.branch.begin(), set.branch.end(), 0) > 0);
    CHECK(std::count(set.branch.begin(), set.branch.end(), 1) > 0);
}

TEST_CASE("3D surfaces are feasible and carry the right sheet count")
{
    SUBCASE("ellipsoid")
    {
        const Quadric q = diag_quadric(Eigen::Vector3d(1, 2, 4));
        const auto set = sample_boundary(standardize(q), 400);
        check_all_feasible(q, set);
        CHECK(std::count(set.branch.begin(), set.branch.end(), 1) == 0);
    }
    SUBCASE("one-sheet hyperboloid")
    {
        const Quadric q = diag_quadric(Eigen::Vector3d(1, 1, -1));
        const auto set = sample_boundary(standardize(q), 400);
        check_all_feasible(q, set);
        CHECK(std::count(set.branch.begin(), set.branch.end(), 1) == 0);
    }
    SUBCASE("two-sheet hyperboloid")
    {
        const Quadric q = diag_quadric(Eigen::Vector3d(1, -1, -1));
        const auto set = sample_boundary(standardize(q), 400);
        check_all_feasible(q, set);
        CHECK(std::count(set.branch.begin(), set.branch.end(), 0) > 0);
        CHECK(std::count(set.branch.begin(), set.branch.end(), 1) > 0);
    }
}

TEST_CASE("unsupported dimension")
{
    const Quadric q = diag_quadric(Eigen::VectorXd::Ones(4));
    CHECK_THROWS_AS(sample_boundary(standardize(q), 10), Unsupported);
}
