// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "fracdiff/analytic.hpp"
#include "fracdiff/caputo.hpp"
#include "fracdiff/experiments.hpp"
#include "fracdiff/scheme.hpp"
#include "fracdiff/tridiagonal.hpp"
#include "fracdiff/types.hpp"
#include "../support/oracles.hpp"

using namespace fracdiff;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void report(int number, const std::string& label, bool pass, double seconds,
            double budget_s, const std::string& detail) {
    const bool in_budget = seconds < budget_s;
    const bool ok = pass && in_budget;
    if (!ok) {
        ++g_failures;
    }
    std::printf("[%s] criterion %d: %s (%.1f s / budget %.0f s) %s\n",
                ok ? "PASS" : "FAIL", number, label.c_str(), seconds, budget_s,
                detail.c_str());
    std::fflush(stdout);
}

bool in_range(double v, double lo, double hi) { return v >= lo && v <= hi; }

// --- criterion 1: convergence orders ---------------------------------------
void criterion_convergence() {
    bool pass = true;
    std::string detail;
    double worst_seconds = 0.0;
    for (double gamma : {0.3, 0.5, 0.8}) {
        Timer t;
        const ExperimentResult r = convergence_study(gamma, 5, 20110901);
        const double secs = t.seconds();
        worst_seconds = std::max(worst_seconds, secs);

        const double so = r.metrics.at("spatial_order");
        const double to = r.metrics.at("temporal_order");
        const double no = r.metrics.at("nonuniform_order");
        const bool ok = in_range(so, 1.7, 2.3) && in_range(to, 0.75, 1.25) &&
                        in_range(no, 0.75, 1.25);
        pass = pass && ok;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "g=%.1f: space %.2f, time %.2f, nonuni %.2f; ",
                      gamma, so, to, no);
        detail += buf;
    }
    report(1, "convergence orders 2.0+-0.3 / 1.0+-0.25", pass, worst_seconds, 60.0,
           detail);
}

// --- criterion 2: unconditional stability -----------------------------------
void criterion_stability() {
    Timer t;
    const ExperimentResult r = stability_suite(50, 42);
    bool pass = true;
    int trials = 0;
    for (const CriterionCheck& c : r.criteria) {
        if (c.name.rfind("trial_", 0) == 0) {
            ++trials;
            pass = pass && c.pass;
        }
    }
    pass = pass && trials == 50;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "worst ratio %.12f over %d trials",
                  r.metrics.at("worst_ratio"), trials);
    report(2, "norm ratios <= 1 + 1e-10 in 50 random trials", pass, t.seconds(), 30.0,
           buf);
}

// --- criterion 3: weight identities -----------------------------------------
void criterion_weights() {
    Timer t;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> gamma_dist(0.02, 0.98);
    std::uniform_int_distribution<std::size_t> len(1, 60);

    bool monotone = true;
    double worst_sum_gap = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        TemporalMesh mesh;
        for (double dt : oracles::random_mesh(rng, len(rng))) {
            mesh.append(dt);
        }
        const std::size_t n = mesh.size() - 1;
        const CaputoWeights w = compute_weights(mesh, n, gamma_dist(rng));

        for (std::size_t m = 1; m < n; ++m) {
            monotone = monotone && w.raw[m] > w.raw[m - 1];
        }
        double acc = 0.0, prev = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            acc += w.scaled[m] - prev;
            prev = w.scaled[m];
        }
        worst_sum_gap = std::max(worst_sum_gap, std::abs(acc - 1.0));
    }
    const bool pass = monotone && worst_sum_gap < 1e-12;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "monotone=%s, worst |sum-1| = %.2e",
                  monotone ? "yes" : "no", worst_sum_gap);
    report(3, "weight monotonicity and unit telescoped sum", pass, t.seconds(), 5.0,
           buf);
}

// --- criteria 4 and 5: point-source reproduction and probe accuracy ---------
void criterion_point_source() {
    Timer t;
    const TimestepPolicy policy = TimestepPolicy::curvature(50);
    const ExperimentResult r1 = point_source_experiment(policy, 1.0);
    const ExperimentResult r01 = point_source_experiment(policy, 0.1);
    const double secs = t.seconds();

    const double steps1 = r1.metrics.at("steps_adaptive");
    const double fixed1 = r1.metrics.at("steps_fixed");
    const double steps01 = r01.metrics.at("steps_adaptive");
    const double speedup = r1.metrics.at("wall_speedup");
    const double boundary = r1.metrics.at("exact_boundary_u10_t2");

    const bool pass4 = in_range(steps1, 59, 69) && fixed1 == 1000.0 &&
                       in_range(steps01, 14, 20) && speedup >= 20.0 &&
                       in_range(boundary, 2.5e-5, 1e-4);
    char buf4[160];
    std::snprintf(buf4, sizeof(buf4),
                  "steps t=1: %.0f, t=0.1: %.0f, fixed: %.0f, speedup %.0fx, "
                  "u(10,2)=%.2e",
                  steps1, steps01, fixed1, speedup, boundary);
    report(4, "point-source steps 64+-5 / 17+-3 / 1000, speedup >= 20x", pass4, secs,
           120.0, buf4);

    const double envelope = r1.metrics.at("probe_error_window_ratio");
    const double err_a = r1.metrics.at("err_max_adaptive_steady");
    const double err_f = r1.metrics.at("err_max_fixed_steady");
    const bool pass5 = envelope <= 2.0 && err_a < 1e-2 && err_f < 1e-2;
    char buf5[128];
    std::snprintf(buf5, sizeof(buf5),
                  "envelope %.2fx (<=2), errors %.2e / %.2e (<1e-2)", envelope, err_a,
                  err_f);
    report(5, "probe error within 2x of fixed run, both < 1e-2", pass5, 0.0, 120.0,
           buf5);
}

// --- criterion 6: oracle agreement ------------------------------------------
void criterion_oracles() {
    Timer t;
    bool thomas_ok = true;
    {
        std::mt19937_64 rng(88);
        std::uniform_int_distribution<std::size_t> size_dist(2, 50);
        std::uniform_real_distribution<double> val(-1.0, 1.0);
        std::uniform_real_distribution<double> bump(0.05, 2.0);
        for (int rep = 0; rep < 100; ++rep) {
            const std::size_t n = size_dist(rng);
            TridiagonalSystem sys;
            sys.sub.resize(n);
            sys.diag.resize(n);
            sys.super.resize(n);
            sys.rhs.resize(n);
            std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
            for (std::size_t i = 0; i < n; ++i) {
                sys.sub[i] = i == 0 ? 0.0 : val(rng);
                sys.super[i] = i == n - 1 ? 0.0 : val(rng);
                sys.diag[i] = std::abs(sys.sub[i]) + std::abs(sys.super[i]) + bump(rng);
                sys.rhs[i] = 4.0 * val(rng);
                dense[i][i] = sys.diag[i];
                if (i > 0) {
                    dense[i][i - 1] = sys.sub[i];
                }
                if (i + 1 < n) {
                    dense[i][i + 1] = sys.super[i];
                }
            }
            const auto x = thomas_solve(sys);
            const auto ref = oracles::dense_solve(dense, sys.rhs);
            for (std::size_t i = 0; i < n; ++i) {
                thomas_ok = thomas_ok &&
                            std::abs(x[i] - ref[i]) <= 1e-12 * std::max(1.0, std::abs(ref[i]));
            }
        }
    }

    bool norm_ok = true;
    double worst_norm = 0.0;
    for (double gamma : {0.3, 0.5, 0.8}) {
        for (double tt : {0.1, 1.0, 2.0}) {
            const double width = std::sqrt(std::pow(tt, gamma));
            const double b = 2.0 / (2.0 - gamma);
            const double c =
                (1.0 - gamma / 2.0) * std::pow(gamma / 2.0, gamma / (2.0 - gamma));
            const double upper = std::pow(32.0 / c, 1.0 / b) * width;
            const double integral =
                2.0 * oracles::adaptive_simpson(
                          [&](double x) { return propagator(x, tt, gamma, 1.0, 1e-11); },
                          0.0, upper, 1e-9);
            worst_norm = std::max(worst_norm, std::abs(integral - 1.0));
            norm_ok = norm_ok && std::abs(integral - 1.0) <= 1e-6;
        }
    }

    bool gauss_ok = true;
    for (double t_g : {1.0, 2.0}) {
        for (double x = -6.0; x <= 6.0; x += 0.1) {
            const double g = propagator(x, t_g, 1.0, 1.0);
            const double ref = std::exp(-x * x / (4.0 * t_g)) /
                               std::sqrt(4.0 * std::acos(-1.0) * t_g);
            gauss_ok = gauss_ok && std::abs(g - ref) <= 1e-8 * (1.0 + std::abs(ref));
        }
    }

    bool similar_ok = true;
    for (double gamma : {0.3, 0.5, 0.8}) {
        for (double tt : {0.2, 0.7, 1.9}) {
            for (double x : {0.0, 0.4, 1.3, 2.9}) {
                const double scale = std::pow(tt, -gamma / 2.0);
                const double lhs = propagator(x, tt, gamma, 1.0);
                const double rhs = scale * propagator(x * scale, 1.0, gamma, 1.0);
                similar_ok = similar_ok && std::abs(lhs - rhs) <= 1e-8;
            }
        }
    }

    const bool pass = thomas_ok && norm_ok && gauss_ok && similar_ok;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "thomas=%s, |int G - 1| max %.1e, gaussian=%s, self-similar=%s",
                  thomas_ok ? "ok" : "FAIL", worst_norm, gauss_ok ? "ok" : "FAIL",
                  similar_ok ? "ok" : "FAIL");
    report(6, "thomas vs dense 1e-12; propagator norm/limit/similarity", pass,
           t.seconds(), 30.0, buf);
}

// --- criterion 7: explicit instability witness -------------------------------
void criterion_explicit_witness() {
    Timer t;
    const SpatialGrid grid = make_grid(-10.0, 10.0, 100);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    std::vector<double> v0(grid.n_nodes(), 0.0);
    for (std::size_t j = 1; j + 1 < v0.size(); ++j) {
        v0[j] = val(rng);
    }
    const std::vector<double> dts(200, grid.dx() * grid.dx());

    const double explicit_ratio =
        perturbation_growth(grid, 0.5, dts, v0, SchemeKind::Explicit);
    const double implicit_ratio =
        perturbation_growth(grid, 0.5, dts, v0, SchemeKind::Implicit);
    const bool pass = explicit_ratio > 1e3 && implicit_ratio <= 1.0 + 1e-10;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "explicit %.2e (> 1e3), implicit %.12f",
                  explicit_ratio, implicit_ratio);
    report(7, "explicit blows past 1e3 within 200 steps; implicit bounded", pass,
           t.seconds(), 10.0, buf);
}

// --- criterion 8: quadratic cost scaling -------------------------------------
void criterion_cost_scaling() {
    Timer t;
    const ExperimentResult r = cost_scaling(2000);
    const double ratio = r.metrics.at("wall_step_ratio");
    const double r2 = r.metrics.at("wall_fit_r2");
    const bool pass = in_range(ratio, 1.6, 2.6) && r2 >= 0.95;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "per-step ratio %.2f, cumulative R^2 = %.4f",
                  ratio, r2);
    report(8, "cumulative cost quadratic (R^2 >= 0.95), step ratio in [1.6, 2.6]",
           pass, t.seconds(), 120.0, buf);
}

}  // namespace

int main() {
    criterion_convergence();
    criterion_stability();
    criterion_weights();
    criterion_point_source();
    criterion_oracles();
    criterion_explicit_witness();
    criterion_cost_scaling();

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    }
    return g_failures;
}
