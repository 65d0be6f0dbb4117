#include "fracdiff/scheme.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fracdiff/caputo.hpp"
#include "fracdiff/tridiagonal.hpp"

namespace fracdiff {

namespace {

bool times_match(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

bool fire_impulses(const ProblemSpec& problem, const SpatialGrid& grid,
                   SolutionHistory& history, double t) {
    bool fired = false;
    for (const Impulse& imp : problem.impulses) {
        if (times_match(imp.time, t)) {
            apply_impulse(history, grid, imp.location, imp.weight);
            fired = true;
        }
    }
    return fired;
}

void check_step_inputs(const TemporalMesh& mesh, const SolutionHistory& history,
                       const SpatialGrid& grid, double dt) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("step: dt must be > 0");
    }
    if (history.size() == 0) {
        throw std::invalid_argument("step: history must hold the initial level");
    }
    if (history.size() != mesh.size()) {
        throw std::invalid_argument("step: history and mesh are out of sync");
    }
    if (history.n_nodes() != grid.n_nodes()) {
        throw std::invalid_argument("step: history node count does not match the grid");
    }
}

}  // namespace

double stencil_coefficient(double gamma, double k_coeff, double dx, double dt) {
    return std::tgamma(2.0 - gamma) * k_coeff * std::pow(dt, gamma) / (dx * dx);
}

StepReport implicit_step(const ProblemSpec& problem, const SpatialGrid& grid,
                         TemporalMesh& mesh, SolutionHistory& history, double dt) {
    check_step_inputs(mesh, history, grid, dt);

    mesh.append(dt);
    const std::size_t n = mesh.size() - 1;
    const double t_n = mesh[n];

    const CaputoWeights weights = compute_weights(mesh, n, problem.gamma);
    const std::vector<double> mem = memory_operator(history, weights, n);

    const double s_n = stencil_coefficient(problem.gamma, problem.k_coeff, grid.dx(), dt);
    // The step equation is the PDE multiplied through by Gamma(2-gamma) dt^gamma
    // (the factor baked into s_n), so the source carries the same scale.
    const double f_scale = std::tgamma(2.0 - problem.gamma) * std::pow(dt, problem.gamma);

    const std::size_t n_nodes = grid.n_nodes();
    std::vector<double> f_tilde(n_nodes - 2);
    for (std::size_t j = 1; j + 1 < n_nodes; ++j) {
        f_tilde[j - 1] = f_scale * problem.source_at(grid.node(j), t_n);
    }

    const double bc_l = problem.boundary_left(t_n);
    const double bc_r = problem.boundary_right(t_n);

    const std::span<const double> mem_interior(mem.data() + 1, n_nodes - 2);
    const TridiagonalSystem sys = build_system(s_n, mem_interior, f_tilde, bc_l, bc_r);
    const std::vector<double> interior = thomas_solve(sys);

    std::vector<double> u(n_nodes);
    u.front() = bc_l;
    u.back() = bc_r;
    std::copy(interior.begin(), interior.end(), u.begin() + 1);
    history.append(std::move(u));

    const bool fired = fire_impulses(problem, grid, history, t_n);
    return {n, t_n, dt, s_n, fired};
}

StepReport explicit_step(const ProblemSpec& problem, const SpatialGrid& grid,
                         TemporalMesh& mesh, SolutionHistory& history, double dt) {
    check_step_inputs(mesh, history, grid, dt);

    const double t_prev = mesh.back();
    mesh.append(dt);
    const std::size_t n = mesh.size() - 1;
    const double t_n = mesh[n];

    const CaputoWeights weights = compute_weights(mesh, n, problem.gamma);
    const std::vector<double> mem = memory_operator(history, weights, n);

    const double s_n = stencil_coefficient(problem.gamma, problem.k_coeff, grid.dx(), dt);
    const double f_scale = std::tgamma(2.0 - problem.gamma) * std::pow(dt, problem.gamma);

    const std::vector<double>& v_prev = history.v_right(n - 1);
    const std::size_t n_nodes = grid.n_nodes();

    std::vector<double> u(n_nodes);
    u.front() = problem.boundary_left(t_n);
    u.back() = problem.boundary_right(t_n);
    for (std::size_t j = 1; j + 1 < n_nodes; ++j) {
        const double lap = v_prev[j + 1] - 2.0 * v_prev[j] + v_prev[j - 1];
        u[j] = mem[j] + s_n * lap + f_scale * problem.source_at(grid.node(j), t_prev);
    }
    history.append(std::move(u));

    const bool fired = fire_impulses(problem, grid, history, t_n);
    return {n, t_n, dt, s_n, fired};
}

void apply_impulse(SolutionHistory& history, const SpatialGrid& grid,
                   double location, double weight) {
    const std::size_t j = grid.nearest_node(location);
    history.v_back()[j] += weight / grid.dx();
}

SolutionHistory initial_history(const ProblemSpec& problem, const SpatialGrid& grid) {
    SolutionHistory history(grid.n_nodes());
    std::vector<double> u0(grid.n_nodes());
    for (std::size_t j = 0; j < u0.size(); ++j) {
        u0[j] = problem.initial(grid.node(j));
    }
    history.append(std::move(u0));
    fire_impulses(problem, grid, history, 0.0);
    return history;
}

RunResult run(const ProblemSpec& problem, const SpatialGrid& grid,
              const TimestepPolicy& policy, double t_end,
              SchemeKind scheme, std::size_t max_steps) {
    using clock = std::chrono::steady_clock;

    problem.validate();
    policy.validate();
    if (!(t_end > 0.0)) {
        throw std::invalid_argument("run: t_end must be > 0");
    }

    std::vector<double> impulse_times;
    impulse_times.reserve(problem.impulses.size());
    for (const Impulse& imp : problem.impulses) {
        impulse_times.push_back(imp.time);
    }
    std::sort(impulse_times.begin(), impulse_times.end());

    RunResult res{initial_history(problem, grid), TemporalMesh{}, RunSummary{}};
    res.summary.dt_min_used = std::numeric_limits<double>::infinity();

    const double tiny = 1e-12 * std::max(1.0, t_end);
    const auto wall_start = clock::now();

    while (res.mesh.back() < t_end - tiny) {
        if (res.summary.steps >= max_steps) {
            throw std::runtime_error("run: step count exceeded the configured ceiling");
        }

        double g = 0.0;
        if (policy.kind == TimestepPolicy::Kind::CurvatureAdaptive) {
            g = curvature_probe(res.history.v_right(res.history.size() - 1), grid,
                                policy.probe_node);
        }
        double dt = next_dt(policy, g);
        if (!(dt > 0.0)) {
            throw std::runtime_error("run: policy returned a non-positive dt");
        }

        const double t_now = res.mesh.back();
        double t_target = t_now + dt;
        for (double ti : impulse_times) {
            if (ti > t_now + tiny) {
                if (t_target >= ti - tiny) {
                    t_target = ti;
                }
                break;
            }
        }
        if (t_target >= t_end - tiny) {
            t_target = std::min(t_target, t_end);
        }
        dt = t_target - t_now;

        const auto step_start = clock::now();
        const StepReport rep = (scheme == SchemeKind::Implicit)
                                   ? implicit_step(problem, grid, res.mesh, res.history, dt)
                                   : explicit_step(problem, grid, res.mesh, res.history, dt);
        const auto step_end = clock::now();

        res.summary.step_ms.push_back(
            std::chrono::duration<double, std::milli>(step_end - step_start).count());
        res.summary.dt_min_used = std::min(res.summary.dt_min_used, rep.dt_used);
        res.summary.dt_max_used = std::max(res.summary.dt_max_used, rep.dt_used);
        ++res.summary.steps;
    }

    res.summary.wall_ms =
        std::chrono::duration<double, std::milli>(clock::now() - wall_start).count();
    if (res.summary.steps == 0) {
        res.summary.dt_min_used = 0.0;
    }
    return res;
}

RunResult run_prescribed(const ProblemSpec& problem, const SpatialGrid& grid,
                         std::span<const double> dts, SchemeKind scheme) {
    problem.validate();

    RunResult res{initial_history(problem, grid), TemporalMesh{}, RunSummary{}};
    res.summary.dt_min_used = std::numeric_limits<double>::infinity();

    using clock = std::chrono::steady_clock;
    const auto wall_start = clock::now();
    for (double dt : dts) {
        const auto step_start = clock::now();
        const StepReport rep = (scheme == SchemeKind::Implicit)
                                   ? implicit_step(problem, grid, res.mesh, res.history, dt)
                                   : explicit_step(problem, grid, res.mesh, res.history, dt);
        const auto step_end = clock::now();
        res.summary.step_ms.push_back(
            std::chrono::duration<double, std::milli>(step_end - step_start).count());
        res.summary.dt_min_used = std::min(res.summary.dt_min_used, rep.dt_used);
        res.summary.dt_max_used = std::max(res.summary.dt_max_used, rep.dt_used);
        ++res.summary.steps;
    }
    res.summary.wall_ms =
        std::chrono::duration<double, std::milli>(clock::now() - wall_start).count();
    if (res.summary.steps == 0) {
        res.summary.dt_min_used = 0.0;
    }
    return res;
}

}  // namespace fracdiff
