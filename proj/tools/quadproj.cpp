// quadproj: classify quadrics, project points onto them, sample their
// boundary, and benchmark the projection cost decomposition.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadproj/bench.hpp"
#include "quadproj/errors.hpp"
#include "quadproj/oracle.hpp"
#include "quadproj/projection.hpp"
#include "quadproj/quadric.hpp"
#include "quadproj/sampling.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitVerification = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
    return j;
}

quadproj::Quadric load_quadric(const std::string& path)
{
    const json j = load_json_file(path);
    if (!j.is_object() || !j.contains("A") || !j.contains("b") || !j.contains("c")) {
        throw IoError(path + ": expected an object with keys \"A\", \"b\", \"c\"");
    }
    const auto& ja = j["A"];
    const auto& jb = j["b"];
    if (!ja.is_array() || ja.empty() || !jb.is_array() || !j["c"].is_number()) {
        throw IoError(path + ": malformed quadric");
    }
    const size_t n = ja.size();
    Eigen::MatrixXd A(n, n);
    for (size_t i = 0; i < n; ++i) {
        if (!ja[i].is_array() || ja[i].size() != n) {
            throw IoError(path + ": A must be a square nested array");
        }
        for (size_t k = 0; k < n; ++k) {
            if (!ja[i][k].is_number()) {
                throw IoError(path + ": A entries must be numbers");
            }
            A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                ja[i][k].get<double>();
        }
    }
    if (jb.size() != n) {
        throw IoError(path + ": b must have length n");
    }
    Eigen::VectorXd b(n);
    for (size_t i = 0; i < n; ++i) {
        if (!jb[i].is_number()) {
            throw IoError(path + ": b entries must be numbers");
        }
        b(static_cast<Eigen::Index>(i)) = jb[i].get<double>();
    }
    return quadproj::Quadric(A, b, j["c"].get<double>());
}

std::vector<Eigen::VectorXd> load_points_json(const std::string& path, int n)
{
    const json j = load_json_file(path);
    if (!j.is_array()) {
        throw IoError(path + ": expected an array of points");
    }
    std::vector<Eigen::VectorXd> pts;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw IoError(path + ": each point must have dimension " + std::to_string(n));
        }
        Eigen::VectorXd p(n);
        for (int k = 0; k < n; ++k) {
            p[k] = row[static_cast<size_t>(k)].get<double>();
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

std::vector<Eigen::VectorXd> load_points_csv(const std::string& path, int n)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::vector<Eigen::VectorXd> pts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(ss, cell, ',')) {
            try {
                vals.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw IoError(path + ": non-numeric cell '" + cell + "'");
            }
        }
        if (static_cast<int>(vals.size()) != n) {
            throw IoError(path + ": row dimension != " + std::to_string(n));
        }
        Eigen::VectorXd p(n);
        for (int k = 0; k < n; ++k) {
            p[k] = vals[static_cast<size_t>(k)];
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

json vec_to_json(const Eigen::VectorXd& v)
{
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        a.push_back(v[i]);
    }
    return a;
}

int run_classify(const std::string& quadric_file, bool require_supported)
{
    const quadproj::Quadric q = load_quadric(quadric_file);
    const quadproj::QuadricClass cls = quadproj::classify(q);

    std::cout << "kind: " << quadproj::to_string(cls.kind) << "\n"
              << "cylindrical: " << (cls.cylindrical ? "true" : "false") << "\n"
              << "rank_A: " << cls.rank_A << "\n"
              << "positives: " << cls.positives << "\n"
              << "rank_Astar: " << cls.rank_Astar << "\n"
              << "rank_Ab: " << cls.rank_Ab << "\n";

    bool supported = false;
    if (cls.kind == quadproj::QuadricKind::Central && !cls.cylindrical) {
        try {
            const quadproj::StandardForm sf = quadproj::standardize(q);
            std::cout << "center:";
            for (Eigen::Index i = 0; i < sf.center.size(); ++i) {
                std::cout << ' ' << fmt17(sf.center[i]);
            }
            const double gamma_input = sf.flipped ? -sf.gamma : sf.gamma;
            std::cout << "\ngamma: " << fmt17(gamma_input) << "\n";
            supported = true;
        } catch (const quadproj::Error&) {
            // central by rank but not standardizable (empty, near-conical)
        }
    }
    if (require_supported && !supported) {
        std::cerr << "quadproj: quadric is not a nonempty non-cylindrical central quadric\n";
        return kExitUnsupported;
    }
    return kExitOk;
}

int run_project(const std::string& quadric_file, const std::string& points_file,
                bool check, bool oracle, const std::string& format,
                double tol_feas, double tol_axis)
{
    const quadproj::Quadric q = load_quadric(quadric_file);
    quadproj::StandardForm sf;
    try {
        sf = quadproj::standardize(q);
    } catch (const quadproj::Error& e) {
        std::cerr << "quadproj: unsupported quadric: " << e.what() << "\n";
        return kExitUnsupported;
    }

    const int n = q.dim();
    const std::vector<Eigen::VectorXd> pts = format == "csv"
                                                 ? load_points_csv(points_file, n)
                                                 : load_points_json(points_file, n);
    if (oracle && n > 8) {
        std::cerr << "quadproj: --oracle requires n <= 8\n";
        return kExitUnsupported;
    }

    quadproj::ProjectOptions opts;
    opts.tau_feas = tol_feas;
    if (tol_axis > 0.0) {
        opts.tau_axis_factor = tol_axis;
    }

    bool violated = false;
    for (size_t idx = 0; idx < pts.size(); ++idx) {
        const Eigen::VectorXd& x0 = pts[idx];
        const quadproj::ProjectionResult res = quadproj::project(sf, x0, opts);

        if (check) {
            const Eigen::VectorXd y0 = quadproj::to_std(sf, x0);
            const quadproj::SecularProblem sp =
                quadproj::make_secular_problem(sf.values, y0, opts);
            const double kkt = quadproj::kkt_residual(
                sp, res.candidates.front().y, res.multiplier);
            if (!q.is_feasible(res.point, tol_feas) || kkt > 1e-8) {
                std::cerr << "quadproj: check failed for point " << idx
                          << " (kkt residual " << fmt17(kkt) << ")\n";
                violated = true;
            }
        }
        if (oracle) {
            const Eigen::VectorXd y0 = quadproj::to_std(sf, x0);
            const quadproj::SecularProblem sp =
                quadproj::make_secular_problem(sf.values, y0, opts);
            const quadproj::OracleResult ores = quadproj::oracle_project_secular(sp);
            const double oracle_dist = sf.scale * std::sqrt(ores.best_dist2);
            if (std::abs(res.distance - oracle_dist) > 1e-7 * (1.0 + oracle_dist)) {
                std::cerr << "quadproj: oracle mismatch for point " << idx << ": "
                          << fmt17(res.distance) << " vs " << fmt17(oracle_dist) << "\n";
                violated = true;
            }
        }

        if (format == "csv") {
            for (Eigen::Index k = 0; k < res.point.size(); ++k) {
                std::cout << fmt17(res.point[k]) << ',';
            }
            std::cout << fmt17(res.distance) << ',' << fmt17(res.multiplier) << ','
                      << (res.degenerate ? 1 : 0) << ',' << res.newton_iterations
                      << "\n";
        } else {
            json rec;
            rec["index"] = idx;
            rec["point"] = vec_to_json(res.point);
            rec["distance"] = res.distance;
            rec["multiplier"] = res.multiplier;
            rec["degenerate"] = res.degenerate;
            rec["iterations"] = res.newton_iterations;
            std::cout << rec.dump() << "\n";
        }
    }
    return violated ? kExitVerification : kExitOk;
}

int run_sample(const std::string& quadric_file, int count, const std::string& out_file)
{
    const quadproj::Quadric q = load_quadric(quadric_file);
    quadproj::StandardForm sf;
    try {
        sf = quadproj::standardize(q);
    } catch (const quadproj::Error& e) {
        std::cerr << "quadproj: unsupported quadric: " << e.what() << "\n";
        return kExitUnsupported;
    }

    quadproj::SampleSet set;
    try {
        set = quadproj::sample_boundary(sf, count);
    } catch (const quadproj::Unsupported& e) {
        std::cerr << "quadproj: " << e.what() << "\n";
        return kExitUnsupported;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_file.empty()) {
        file.open(out_file);
        if (!file) {
            std::cerr << "quadproj: cannot write " << out_file << "\n";
            return kExitIo;
        }
        out = &file;
    }

    const int n = static_cast<int>(set.points.cols());
    for (int k = 0; k < n; ++k) {
        *out << 'x' << (k + 1) << ',';
    }
    *out << "branch\n";
    for (Eigen::Index i = 0; i < set.points.rows(); ++i) {
        for (int k = 0; k < n; ++k) {
            *out << fmt17(set.points(i, k)) << ',';
        }
        *out << set.branch[static_cast<size_t>(i)] << "\n";
    }
    return kExitOk;
}

int run_bench_cmd(int n, int count, std::uint64_t seed)
{
    const quadproj::BenchReport rep = quadproj::run_bench(n, count, seed);
    std::cout << "n: " << rep.n << "\n"
              << "count: " << rep.count << "\n"
              << "eig_mean_s: " << fmt17(rep.eig_mean_s) << "\n"
              << "eig_median_s: " << fmt17(rep.eig_median_s) << "\n"
              << "solve_mean_s: " << fmt17(rep.solve_mean_s) << "\n"
              << "solve_median_s: " << fmt17(rep.solve_median_s) << "\n"
              << "mean_ratio: " << fmt17(rep.mean_ratio) << "\n"
              << "median_newton_iterations: " << fmt17(rep.median_newton_iterations)
              << "\n"
              << "max_newton_iterations: " << rep.max_newton_iterations << "\n"
              << "all_feasible: " << (rep.all_feasible ? "true" : "false") << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact projection onto non-cylindrical central quadrics"};
    app.require_subcommand(1);

    std::string quadric_file;
    std::string points_file;
    std::string out_file;
    std::string format = "json";
    bool require_supported = false;
    bool check = false;
    bool oracle = false;
    double tol_feas = 1e-8;
    double tol_axis = -1.0;
    int count = 100;
    int bench_n = 500;
    std::uint64_t seed = 0;

    auto* classify = app.add_subcommand("classify", "Classify a quadric");
    classify->add_option("quadric", quadric_file, "Quadric JSON file")->required();
    classify->add_flag("--require-supported", require_supported,
                       "Exit nonzero unless the quadric is projectable");

    auto* project = app.add_subcommand("project", "Project points onto a quadric");
    project->add_option("quadric", quadric_file, "Quadric JSON file")->required();
    project->add_option("--points", points_file, "Points file (JSON array or CSV)")
        ->required();
    project->add_flag("--check", check, "Re-verify feasibility and KKT residuals");
    project->add_flag("--oracle", oracle, "Cross-check distances (n <= 8)");
    project->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    project->add_option("--tol-feas", tol_feas, "Feasibility tolerance");
    project->add_option("--tol-axis", tol_axis, "Axis-degeneracy tolerance factor");

    auto* sample = app.add_subcommand("sample", "Emit boundary points (n = 2 or 3)");
    sample->add_option("quadric", quadric_file, "Quadric JSON file")->required();
    sample->add_option("--count", count, "Approximate sample count");
    sample->add_option("--out", out_file, "Output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "Time eigendecomposition vs root-finding");
    bench->add_option("--n", bench_n, "Problem size");
    bench->add_option("--count", count, "Instance count");
    bench->add_option("--seed", seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) {
            return run_classify(quadric_file, require_supported);
        }
        if (project->parsed()) {
            return run_project(quadric_file, points_file, check, oracle, format,
                               tol_feas, tol_axis);
        }
        if (sample->parsed()) {
            return run_sample(quadric_file, count, out_file);
        }
        if (bench->parsed()) {
            return run_bench_cmd(bench_n, count, seed);
        }
    } catch (const IoError& e) {
        std::cerr << "quadproj: " << e.what() << "\n";
        return kExitIo;
    } catch (const quadproj::Error& e) {
        std::cerr << "quadproj: " << e.what() << "\n";
        return kExitUnsupported;
    }
    return kExitOk;
}
