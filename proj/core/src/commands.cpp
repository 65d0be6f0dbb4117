#include "fracdiff/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "fracdiff/analytic.hpp"
#include "fracdiff/config.hpp"
#include "fracdiff/experiments.hpp"
#include "fracdiff/scheme.hpp"
#include "format.hpp"

namespace fracdiff {

namespace {

using detail::format_double;

// Exact solution for the problems the config can express: zero initial and
// boundary data with weighted point injections at x = 0. At an injection time
// the left limit is taken, matching the U column.
double exact_superposition(const RunConfig& cfg, double x, double t) {
    double sum = 0.0;
    for (double ti : cfg.impulse_times) {
        if (ti < t - 1e-9 * std::max(1.0, t)) {
            sum += cfg.impulse_weight * propagator(x, t - ti, cfg.gamma, cfg.k_coeff);
        }
    }
    return sum;
}

std::size_t nearest_level(const TemporalMesh& mesh, double t) {
    std::size_t best = 0;
    double best_gap = std::abs(mesh[0] - t);
    for (std::size_t m = 1; m < mesh.size(); ++m) {
        const double gap = std::abs(mesh[m] - t);
        if (gap < best_gap) {
            best_gap = gap;
            best = m;
        }
    }
    return best;
}

void write_solution_csv(const RunConfig& cfg, const SpatialGrid& grid,
                        const RunResult& rr, std::ostream& os) {
    os << "t,x,U,V,exact,abs_error\n";
    std::vector<double> snapshots = cfg.snapshot_times;
    if (snapshots.empty()) {
        snapshots.push_back(rr.mesh.back());
    }
    for (double s : snapshots) {
        const std::size_t m = nearest_level(rr.mesh, s);
        const double t = rr.mesh[m];
        const std::vector<double>& u = rr.history.u_left(m);
        const std::vector<double>& v = rr.history.v_right(m);
        for (std::size_t j = 0; j < grid.n_nodes(); ++j) {
            const double exact = exact_superposition(cfg, grid.node(j), t);
            os << format_double(t) << ',' << format_double(grid.node(j)) << ','
               << format_double(u[j]) << ',' << format_double(v[j]) << ','
               << format_double(exact) << ',' << format_double(std::abs(u[j] - exact))
               << '\n';
        }
    }
}

void write_mesh_csv(const RunResult& rr, std::ostream& os) {
    os << "m,t_m,dt_m\n";
    for (std::size_t m = 0; m < rr.mesh.size(); ++m) {
        const double dt = m == 0 ? 0.0 : rr.mesh.dt(m);
        os << m << ',' << format_double(rr.mesh[m]) << ',' << format_double(dt) << '\n';
    }
}

void write_error_trace_csv(const RunConfig& cfg, const SpatialGrid& grid,
                           const RunResult& rr, std::ostream& os) {
    const double x_probe = grid.node(cfg.policy.probe_node);
    os << "t,abs_error_at_probe\n";
    for (std::size_t m = 1; m < rr.mesh.size(); ++m) {
        const double t = rr.mesh[m];
        const double exact = exact_superposition(cfg, x_probe, t);
        const double err = std::abs(rr.history.u_left(m)[cfg.policy.probe_node] - exact);
        os << format_double(t) << ',' << format_double(err) << '\n';
    }
}

void write_summary_json(const RunResult& rr, std::ostream& os) {
    nlohmann::json j{{"steps", rr.summary.steps},
                     {"wall_ms", rr.summary.wall_ms},
                     {"dt_min_used", rr.summary.dt_min_used},
                     {"dt_max_used", rr.summary.dt_max_used}};
    os << j.dump(2) << '\n';
}

std::ofstream open_output(const std::filesystem::path& dir, const std::string& name) {
    std::ofstream os(dir / name, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot write output file '" + (dir / name).string() + "'");
    }
    return os;
}

}  // namespace

int cmd_solve(const std::string& config_path, std::ostream& /*out*/, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_config_file(config_path);
        cfg.validate();
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << '\n';
        return 1;
    }

    try {
        const SpatialGrid grid = cfg.grid();
        const RunResult rr = run(cfg.problem(), grid, cfg.policy, cfg.t_end, cfg.scheme);

        const std::filesystem::path dir(cfg.out_dir);
        std::filesystem::create_directories(dir);

        auto solution = open_output(dir, "solution.csv");
        write_solution_csv(cfg, grid, rr, solution);
        auto mesh = open_output(dir, "mesh.csv");
        write_mesh_csv(rr, mesh);
        auto trace = open_output(dir, "error_trace.csv");
        write_error_trace_csv(cfg, grid, rr, trace);
        auto summary = open_output(dir, "summary.json");
        write_summary_json(rr, summary);
    } catch (const std::exception& e) {
        err << "solver error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

int cmd_experiment(const std::string& name, const std::string& config_path,
                   std::ostream& out, std::ostream& err) {
    const bool known = name == "convergence" || name == "stability" ||
                       name == "point-source" || name == "cost-scaling";
    if (!known) {
        err << "unknown experiment '" << name
            << "' (expected convergence|stability|point-source|cost-scaling)\n";
        return 1;
    }

    RunConfig cfg;
    try {
        cfg = parse_config_file(config_path);
        cfg.validate();
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << '\n';
        return 1;
    }

    ExperimentResult result;
    try {
        if (name == "convergence") {
            result = convergence_study(cfg.gamma, 5, static_cast<unsigned>(cfg.seed));
        } else if (name == "stability") {
            result = stability_suite(50, static_cast<unsigned>(cfg.seed));
        } else if (name == "point-source") {
            TimestepPolicy policy = cfg.policy;
            if (policy.kind == TimestepPolicy::Kind::Fixed) {
                policy = TimestepPolicy::curvature(cfg.n_intervals / 2);
            }
            result = point_source_experiment(policy, cfg.t_end);
        } else {
            result = cost_scaling(2000);
        }

        const std::filesystem::path dir(cfg.out_dir);
        std::filesystem::create_directories(dir);
        auto csv = open_output(dir, name + ".csv");
        write_csv(result, csv);
    } catch (const std::exception& e) {
        err << "experiment error: " << e.what() << '\n';
        return 2;
    }

    for (const CriterionCheck& c : result.criteria) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " value="
            << format_double(c.value) << " range=[" << format_double(c.lo) << ", "
            << format_double(c.hi) << "]\n";
    }
    return result.pass() ? 0 : 3;
}

}  // namespace fracdiff
