#include "fracdiff/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include "fracdiff/analytic.hpp"
#include "fracdiff/caputo.hpp"
#include "format.hpp"

namespace fracdiff {

namespace {

constexpr double kStabilityBound = 1.0 + 1e-10;

double median3(double a, double b, double c) {
    return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

double median(std::vector<double> v) {
    if (v.empty()) {
        return 0.0;
    }
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    return v[mid];
}

double discrete_l2(std::span<const double> v, double dx) {
    double acc = 0.0;
    for (double x : v) {
        acc += x * x;
    }
    return std::sqrt(dx * acc);
}

// Least-squares slope of log2(err) against log2(step); the observed order is
// its negation when the step halves per level.
double observed_order(std::span<const double> steps, std::span<const double> errs) {
    const std::size_t n = steps.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::log2(steps[i]);
        const double y = std::log2(errs[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double nd = static_cast<double>(n);
    return (nd * sxy - sx * sy) / (nd * sxx - sx * sx);
}

void add_criterion(ExperimentResult& r, const std::string& name, double value,
                   double lo, double hi) {
    r.criteria.push_back({name, value, lo, hi, value >= lo && value <= hi});
}

bool near(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

double sup_error_at_final(const RunResult& rr, const SpatialGrid& grid,
                          const SpaceTimeFunction& exact) {
    const double t_final = rr.mesh.back();
    const std::vector<double>& u = rr.history.u_left(rr.history.size() - 1);
    double err = 0.0;
    for (std::size_t j = 0; j < grid.n_nodes(); ++j) {
        err = std::max(err, std::abs(u[j] - exact(grid.node(j), t_final)));
    }
    return err;
}

std::vector<double> uniform_steps_to(double t_end, double dt) {
    std::vector<double> dts;
    double t = 0.0;
    while (t < t_end - 1e-12) {
        double step = dt;
        if (t + step >= t_end - 1e-12) {
            step = t_end - t;
        }
        dts.push_back(step);
        t += step;
    }
    return dts;
}

}  // namespace

bool ExperimentResult::pass() const {
    return std::all_of(criteria.begin(), criteria.end(),
                       [](const CriterionCheck& c) { return c.pass; });
}

void to_json(nlohmann::json& j, const CriterionCheck& c) {
    j = nlohmann::json{{"name", c.name}, {"value", c.value}, {"lo", c.lo},
                       {"hi", c.hi},     {"pass", c.pass}};
}

void from_json(const nlohmann::json& j, CriterionCheck& c) {
    j.at("name").get_to(c.name);
    j.at("value").get_to(c.value);
    j.at("lo").get_to(c.lo);
    j.at("hi").get_to(c.hi);
    j.at("pass").get_to(c.pass);
}

void to_json(nlohmann::json& j, const ExperimentResult& r) {
    j = nlohmann::json{{"name", r.name},
                       {"parameters", r.parameters},
                       {"metrics", r.metrics},
                       {"criteria", r.criteria}};
}

void from_json(const nlohmann::json& j, ExperimentResult& r) {
    j.at("name").get_to(r.name);
    j.at("parameters").get_to(r.parameters);
    j.at("metrics").get_to(r.metrics);
    j.at("criteria").get_to(r.criteria);
}

void write_csv(const ExperimentResult& result, std::ostream& os) {
    os << "section,key,value,lo,hi,pass\n";
    for (const auto& [k, v] : result.parameters) {
        os << "parameter," << k << ',' << v << ",,,\n";
    }
    for (const auto& [k, v] : result.metrics) {
        os << "metric," << k << ',' << detail::format_double(v) << ",,,\n";
    }
    for (const CriterionCheck& c : result.criteria) {
        os << "criterion," << c.name << ',' << detail::format_double(c.value) << ','
           << detail::format_double(c.lo) << ',' << detail::format_double(c.hi) << ','
           << (c.pass ? "PASS" : "FAIL") << '\n';
    }
}

ExperimentResult convergence_study(double gamma, int refinement_levels, unsigned seed) {
    if (refinement_levels < 3) {
        throw std::invalid_argument("convergence_study: need at least 3 refinement levels");
    }
    const auto wall_start = std::chrono::steady_clock::now();

    const ManufacturedProblem mp = make_manufactured(gamma, 1.0);
    std::mt19937_64 rng(seed);

    ExperimentResult r;
    r.name = "convergence";
    r.parameters["gamma"] = detail::format_double(gamma);
    r.parameters["levels"] = std::to_string(refinement_levels);
    r.parameters["seed"] = std::to_string(seed);

    // Spatial sweep: dx halves per level under a tiny fixed dt.
    const double dt_spatial = 2e-4;
    std::vector<double> h_spatial, err_spatial;
    for (int level = 0; level < refinement_levels; ++level) {
        const std::size_t n_intervals = 5u << level;
        const SpatialGrid grid = make_grid(0.0, 1.0, n_intervals);
        const auto rr = run_prescribed(mp.problem, grid, uniform_steps_to(1.0, dt_spatial));
        const double err = sup_error_at_final(rr, grid, mp.exact_u);
        h_spatial.push_back(grid.dx());
        err_spatial.push_back(err);
        r.metrics["spatial_err_" + std::to_string(level)] = err;
    }
    const double spatial_order = observed_order(h_spatial, err_spatial);
    r.metrics["spatial_order"] = spatial_order;

    // Temporal sweep: uniform dt halves per level at fine fixed dx.
    const SpatialGrid fine_grid = make_grid(0.0, 1.0, 200);
    std::vector<double> h_temporal, err_temporal;
    for (int level = 0; level < refinement_levels; ++level) {
        const double dt = 0.1 / static_cast<double>(1 << level);
        const auto rr = run_prescribed(mp.problem, fine_grid, uniform_steps_to(1.0, dt));
        const double err = sup_error_at_final(rr, fine_grid, mp.exact_u);
        h_temporal.push_back(dt);
        err_temporal.push_back(err);
        r.metrics["temporal_err_" + std::to_string(level)] = err;
    }
    const double temporal_order = observed_order(h_temporal, err_temporal);
    r.metrics["temporal_order"] = temporal_order;

    // Same sweep on random non-uniform meshes. Each repetition draws one step
    // profile and reuses it across the levels (every level scales the same
    // fractions by its h), so the mesh-shape constant cancels from the per-rep
    // slope; the reported order is the median slope over five profiles. The
    // range starts one level coarser than the uniform sweep to stay clear of
    // the dx^2 error floor.
    std::uniform_real_distribution<double> frac(0.5, 1.0);
    const int random_levels = refinement_levels + 1;   // one coarser start, same finest h
    std::vector<double> rep_orders;
    std::vector<std::vector<double>> level_errs(random_levels);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> fractions(512);
        for (double& f : fractions) {
            f = frac(rng);
        }
        std::vector<double> hs, errs;
        for (int level = 0; level < random_levels; ++level) {
            const double h_max = 0.2 / static_cast<double>(1 << level);
            std::vector<double> dts;
            double t = 0.0;
            std::size_t i = 0;
            while (t < 1.0 - 1e-12) {
                double step = std::min(h_max * fractions[i++ % fractions.size()], 1.0 - t);
                if (1.0 - t - step < 0.1 * h_max) {
                    step = 1.0 - t;
                }
                dts.push_back(step);
                t += step;
            }
            const auto rr = run_prescribed(mp.problem, fine_grid, dts);
            hs.push_back(*std::max_element(dts.begin(), dts.end()));
            errs.push_back(sup_error_at_final(rr, fine_grid, mp.exact_u));
            level_errs[level].push_back(errs.back());
        }
        rep_orders.push_back(observed_order(hs, errs));
    }
    std::sort(rep_orders.begin(), rep_orders.end());
    const double nonuniform_order = rep_orders[rep_orders.size() / 2];
    for (int level = 0; level < random_levels; ++level) {
        std::sort(level_errs[level].begin(), level_errs[level].end());
        r.metrics["nonuniform_err_" + std::to_string(level)] =
            level_errs[level][level_errs[level].size() / 2];
    }
    r.metrics["nonuniform_order"] = nonuniform_order;

    add_criterion(r, "spatial_order", spatial_order, 1.7, 2.3);
    add_criterion(r, "temporal_order_uniform", temporal_order, 0.75, 1.25);
    add_criterion(r, "temporal_order_nonuniform", nonuniform_order, 0.75, 1.25);
    add_criterion(r, "spatial_error_monotone",
                  err_spatial.back() < err_spatial.front() ? 1.0 : 0.0, 1.0, 1.0);
    add_criterion(r, "temporal_error_monotone",
                  err_temporal.back() < err_temporal.front() ? 1.0 : 0.0, 1.0, 1.0);

    r.metrics["wall_ms_total"] = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - wall_start)
                                     .count();
    return r;
}

double perturbation_growth(const SpatialGrid& grid, double gamma,
                           std::span<const double> dts, std::span<const double> v0,
                           SchemeKind scheme) {
    const double norm0 = discrete_l2(v0, grid.dx());
    if (norm0 == 0.0) {
        return 0.0;
    }

    ProblemSpec problem;
    problem.gamma = gamma;
    problem.k_coeff = 1.0;
    problem.x_left = grid.x_left();
    problem.x_right = grid.x_right();

    SolutionHistory history(grid.n_nodes());
    history.append(std::vector<double>(v0.begin(), v0.end()));
    TemporalMesh mesh;

    double worst = 0.0;
    for (double dt : dts) {
        if (scheme == SchemeKind::Implicit) {
            implicit_step(problem, grid, mesh, history, dt);
        } else {
            explicit_step(problem, grid, mesh, history, dt);
        }
        const double ratio =
            discrete_l2(history.u_left(history.size() - 1), grid.dx()) / norm0;
        if (!std::isfinite(ratio)) {
            return std::numeric_limits<double>::infinity();
        }
        worst = std::max(worst, ratio);
        if (worst > 1e9) {
            break;   // unstable beyond doubt; stop before overflow breeds NaNs
        }
    }
    return worst;
}

ExperimentResult stability_suite(int trials, unsigned seed) {
    if (trials < 1) {
        throw std::invalid_argument("stability_suite: trials must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> gamma_dist(0.05, 0.95);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);

    ExperimentResult r;
    r.name = "stability";
    r.parameters["trials"] = std::to_string(trials);
    r.parameters["seed"] = std::to_string(seed);

    const SpatialGrid grid = make_grid(0.0, 1.0, 32);
    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        const double gamma = gamma_dist(rng);

        // Random mesh with occasional adversarial bursts: a run of tiny steps
        // followed by a jump to the largest allowed step.
        std::vector<double> dts;
        while (dts.size() < 70) {
            if (unit(rng) < 0.2) {
                for (int i = 0; i < 5; ++i) {
                    dts.push_back(std::pow(10.0, -4.0 + unit(rng)));
                }
                dts.push_back(0.1);
            } else {
                dts.push_back(std::pow(10.0, -4.0 + 3.0 * unit(rng)));
            }
        }
        dts.resize(70);

        std::vector<double> v0(grid.n_nodes(), 0.0);
        for (std::size_t j = 1; j + 1 < v0.size(); ++j) {
            v0[j] = sym(rng);
        }

        const double ratio = perturbation_growth(grid, gamma, dts, v0, SchemeKind::Implicit);
        worst = std::max(worst, ratio);

        char label[32];
        std::snprintf(label, sizeof(label), "trial_%02d_ratio", trial);
        add_criterion(r, label, ratio, 0.0, kStabilityBound);
    }
    r.metrics["worst_ratio"] = worst;

    // Paired witness: the explicit scheme under dt = dx^2 diverges while the
    // implicit scheme stays bounded on the identical configuration.
    const SpatialGrid wide = make_grid(-10.0, 10.0, 100);
    std::vector<double> v0(wide.n_nodes(), 0.0);
    for (std::size_t j = 1; j + 1 < v0.size(); ++j) {
        v0[j] = sym(rng);
    }
    const std::vector<double> dts(200, wide.dx() * wide.dx());
    const double explicit_ratio =
        std::min(perturbation_growth(wide, 0.5, dts, v0, SchemeKind::Explicit), 1e12);
    const double implicit_ratio = perturbation_growth(wide, 0.5, dts, v0, SchemeKind::Implicit);
    r.metrics["explicit_witness_ratio"] = explicit_ratio;
    r.metrics["implicit_witness_ratio"] = implicit_ratio;
    add_criterion(r, "explicit_witness_growth", explicit_ratio, 1e3,
                  std::numeric_limits<double>::max());
    add_criterion(r, "implicit_witness_bounded", implicit_ratio, 0.0, kStabilityBound);

    return r;
}

ExperimentResult point_source_experiment(const TimestepPolicy& policy, double t_end) {
    if (!(t_end > 0.0 && t_end <= 2.0)) {
        throw std::invalid_argument("point_source_experiment: t_end must lie in (0, 2]");
    }
    const double gamma = 0.5;
    const double k_coeff = 1.0;

    ProblemSpec problem;
    problem.gamma = gamma;
    problem.k_coeff = k_coeff;
    problem.x_left = -10.0;
    problem.x_right = 10.0;
    problem.impulses = {{0.0, 0.0, 1.0}, {1.0, 0.0, 1.0}, {2.0, 0.0, 1.0}};

    const SpatialGrid grid = make_grid(-10.0, 10.0, 100);
    const std::size_t probe = 50;   // the source node x = 0 on the pinned grid

    ExperimentResult r;
    r.name = "point-source";
    r.parameters["t_end"] = detail::format_double(t_end);
    r.parameters["dt_min"] = detail::format_double(policy.dt_min);
    r.parameters["dt_max"] = detail::format_double(policy.dt_max);
    r.parameters["curvature_scale"] = detail::format_double(policy.curvature_scale);

    const TimestepPolicy fixed = TimestepPolicy::fixed_step(1e-3);

    // Median-of-3 on wall clock; the histories of repeat runs are identical.
    double wa0 = 0, wa1 = 0, wa2 = 0, wf0 = 0, wf1 = 0, wf2 = 0;
    RunResult adaptive = run(problem, grid, policy, t_end);
    wa0 = adaptive.summary.wall_ms;
    wa1 = run(problem, grid, policy, t_end).summary.wall_ms;
    wa2 = run(problem, grid, policy, t_end).summary.wall_ms;
    RunResult fixed_run = run(problem, grid, fixed, t_end);
    wf0 = fixed_run.summary.wall_ms;
    wf1 = run(problem, grid, fixed, t_end).summary.wall_ms;
    wf2 = run(problem, grid, fixed, t_end).summary.wall_ms;

    const double wall_adaptive = median3(wa0, wa1, wa2);
    const double wall_fixed = median3(wf0, wf1, wf2);

    r.metrics["steps_adaptive"] = static_cast<double>(adaptive.summary.steps);
    r.metrics["steps_fixed"] = static_cast<double>(fixed_run.summary.steps);
    r.metrics["wall_ms_adaptive"] = wall_adaptive;
    r.metrics["wall_ms_fixed"] = wall_fixed;
    const double speedup = wall_fixed / std::max(wall_adaptive, 1e-9);
    r.metrics["wall_speedup"] = speedup;

    std::size_t steps_in_transient = 0;
    for (std::size_t m = 1; m < adaptive.mesh.size(); ++m) {
        if (adaptive.mesh[m] <= 0.01 + 1e-12) {
            ++steps_in_transient;
        }
    }
    r.metrics["steps_in_transient"] = static_cast<double>(steps_in_transient);

    const double exact_boundary = point_source_exact(10.0, 2.0, gamma, k_coeff);
    r.metrics["exact_boundary_u10_t2"] = exact_boundary;

    // Probe-error traces against the exact superposition, skipping the short
    // transient after each injection.
    const auto trace_errors = [&](const RunResult& rr) {
        std::vector<std::pair<double, double>> out;
        for (std::size_t m = 1; m < rr.mesh.size(); ++m) {
            const double t = rr.mesh[m];
            const double exact = point_source_exact(0.0, t, gamma, k_coeff);
            const double err = std::abs(rr.history.u_left(m)[probe] - exact);
            out.emplace_back(t, err);
        }
        return out;
    };
    const auto in_transient = [&](double t) {
        for (double ti : {0.0, 1.0, 2.0}) {
            if (t >= ti - 1e-12 && t < ti + 0.01 - 1e-12) {
                return true;
            }
        }
        return false;
    };

    const auto errs_adaptive = trace_errors(adaptive);
    const auto errs_fixed = trace_errors(fixed_run);

    double steady_adaptive = 0.0, steady_fixed = 0.0;
    for (const auto& [t, e] : errs_adaptive) {
        if (!in_transient(t)) {
            steady_adaptive = std::max(steady_adaptive, e);
        }
    }
    for (const auto& [t, e] : errs_fixed) {
        if (!in_transient(t)) {
            steady_fixed = std::max(steady_fixed, e);
        }
    }
    r.metrics["err_max_adaptive_steady"] = steady_adaptive;
    r.metrics["err_max_fixed_steady"] = steady_fixed;

    // Windowed error envelope over [0.05, min(1, t_end)): within each window the
    // adaptive worst-case error may not exceed twice the fixed-step one.
    const double win_lo = 0.05;
    const double win_hi = std::min(1.0, t_end);
    double window_ratio_max = 0.0;
    bool have_windows = false;
    if (win_hi > win_lo * 1.2) {
        const int n_windows = 6;
        const double growth = std::pow(win_hi / win_lo, 1.0 / n_windows);
        for (int w = 0; w < n_windows; ++w) {
            const double a = win_lo * std::pow(growth, w);
            const double b = win_lo * std::pow(growth, w + 1);
            double ea = -1.0, ef = -1.0;
            for (const auto& [t, e] : errs_adaptive) {
                if (t >= a && t < b) {
                    ea = std::max(ea, e);
                }
            }
            for (const auto& [t, e] : errs_fixed) {
                if (t >= a && t < b) {
                    ef = std::max(ef, e);
                }
            }
            if (ea >= 0.0 && ef > 0.0) {
                have_windows = true;
                window_ratio_max = std::max(window_ratio_max, ea / ef);
            }
        }
    }
    if (have_windows) {
        r.metrics["probe_error_window_ratio"] = window_ratio_max;
        add_criterion(r, "probe_error_envelope", window_ratio_max, 0.0, 2.0);
    }

    if (near(t_end, 1.0)) {
        add_criterion(r, "steps_adaptive_t1", r.metrics["steps_adaptive"], 59.0, 69.0);
        add_criterion(r, "steps_fixed_t1", r.metrics["steps_fixed"], 1000.0, 1000.0);
        add_criterion(r, "wall_speedup", speedup, 20.0, std::numeric_limits<double>::max());
    }
    if (near(t_end, 0.1)) {
        add_criterion(r, "steps_adaptive_t01", r.metrics["steps_adaptive"], 14.0, 20.0);
        add_criterion(r, "steps_fixed_t01", r.metrics["steps_fixed"], 100.0, 100.0);
    }
    add_criterion(r, "steps_in_transient", static_cast<double>(steps_in_transient), 4.0,
                  std::numeric_limits<double>::max());
    add_criterion(r, "adaptive_error_steady", steady_adaptive, 0.0, 1e-2);
    add_criterion(r, "fixed_error_steady", steady_fixed, 0.0, 1e-2);
    add_criterion(r, "exact_boundary_magnitude", exact_boundary, 2.5e-5, 1e-4);

    return r;
}

ExperimentResult cost_scaling(std::size_t n_steps) {
    if (n_steps < 100) {
        throw std::invalid_argument("cost_scaling: need at least 100 steps");
    }

    ProblemSpec problem;
    problem.gamma = 0.5;
    problem.k_coeff = 1.0;
    problem.x_left = 0.0;
    problem.x_right = 1.0;
    problem.ic = [](double x) { return std::sin(std::numbers::pi * x); };

    // N = 400 keeps the history well past cache in both timing windows, so the
    // per-step cost scales with the history length rather than with cache tier.
    const SpatialGrid grid = make_grid(0.0, 1.0, 400);
    const double dt = 1.0 / static_cast<double>(n_steps);
    const RunResult rr = run(problem, grid, TimestepPolicy::fixed_step(dt), 1.0);

    ExperimentResult r;
    r.name = "cost-scaling";
    r.parameters["n_steps"] = std::to_string(n_steps);
    r.parameters["n_intervals"] = std::to_string(grid.n_intervals());

    const std::vector<double>& step_ms = rr.summary.step_ms;
    const std::size_t n = step_ms.size();

    const auto window_median = [&](std::size_t centre) {
        const std::size_t half = std::max<std::size_t>(n / 20, 10);
        const std::size_t lo = centre > half ? centre - half : 0;
        const std::size_t hi = std::min(centre + half, n);
        return median(std::vector<double>(step_ms.begin() + static_cast<std::ptrdiff_t>(lo),
                                          step_ms.begin() + static_cast<std::ptrdiff_t>(hi)));
    };
    const double mid_ms = window_median(n / 2);
    const double end_ms = window_median(n - 1);
    const double ratio = end_ms / std::max(mid_ms, 1e-12);

    // Quadratic fit of the cumulative wall time against the step index.
    std::vector<double> cumulative(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += step_ms[i];
        cumulative[i] = acc;
    }
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, b0 = 0, b1 = 0, b2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = static_cast<double>(i + 1) / static_cast<double>(n);
        const double y = cumulative[i];
        s0 += 1.0;
        s1 += s;
        s2 += s * s;
        s3 += s * s * s;
        s4 += s * s * s * s;
        b0 += y;
        b1 += s * y;
        b2 += s * s * y;
    }
    // Solve the 3x3 normal equations by elimination.
    double m[3][4] = {{s0, s1, s2, b0}, {s1, s2, s3, b1}, {s2, s3, s4, b2}};
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int row = col + 1; row < 3; ++row) {
            if (std::abs(m[row][col]) > std::abs(m[piv][col])) {
                piv = row;
            }
        }
        std::swap(m[col], m[piv]);
        for (int row = 0; row < 3; ++row) {
            if (row == col) {
                continue;
            }
            const double f = m[row][col] / m[col][col];
            for (int c = col; c < 4; ++c) {
                m[row][c] -= f * m[col][c];
            }
        }
    }
    const double c0 = m[0][3] / m[0][0];
    const double c1 = m[1][3] / m[1][1];
    const double c2 = m[2][3] / m[2][2];

    const double mean_y = b0 / s0;
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = static_cast<double>(i + 1) / static_cast<double>(n);
        const double fit = c0 + c1 * s + c2 * s * s;
        ss_res += (cumulative[i] - fit) * (cumulative[i] - fit);
        ss_tot += (cumulative[i] - mean_y) * (cumulative[i] - mean_y);
    }
    const double r_squared = 1.0 - ss_res / ss_tot;

    const std::size_t history_bytes =
        rr.history.size() * grid.n_nodes() * sizeof(double);

    r.metrics["wall_per_step_mid_ms"] = mid_ms;
    r.metrics["wall_per_step_end_ms"] = end_ms;
    r.metrics["wall_step_ratio"] = ratio;
    r.metrics["wall_fit_r2"] = r_squared;
    r.metrics["wall_ms_total"] = rr.summary.wall_ms;
    r.metrics["history_levels"] = static_cast<double>(rr.history.size());
    r.metrics["history_bytes"] = static_cast<double>(history_bytes);

    add_criterion(r, "per_step_ratio", ratio, 1.6, 2.6);
    add_criterion(r, "cumulative_quadratic_r2", r_squared, 0.95, 1.0 + 1e-9);
    add_criterion(r, "history_levels", static_cast<double>(rr.history.size()),
                  static_cast<double>(n_steps + 1), static_cast<double>(n_steps + 1));
    return r;
}

}  // namespace fracdiff
