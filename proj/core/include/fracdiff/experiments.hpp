#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracdiff/adaptive.hpp"
#include "fracdiff/scheme.hpp"
#include "fracdiff/types.hpp"

namespace fracdiff {

struct CriterionCheck {
    std::string name;
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    bool pass = false;
};

/// Outcome of one scripted experiment: scalar metrics plus pass/fail criteria.
/// Metric keys starting with "wall_" carry timings and are not reproducible
/// across runs; everything else is deterministic for a given seed.
struct ExperimentResult {
    std::string name;
    std::map<std::string, std::string> parameters;
    std::map<std::string, double> metrics;
    std::vector<CriterionCheck> criteria;

    bool pass() const;
};

void to_json(nlohmann::json& j, const CriterionCheck& c);
void from_json(const nlohmann::json& j, CriterionCheck& c);
void to_json(nlohmann::json& j, const ExperimentResult& r);
void from_json(const nlohmann::json& j, ExperimentResult& r);

/// CSV form: one header row "section,key,value,lo,hi,pass", then one row per
/// parameter, metric, and criterion.
void write_csv(const ExperimentResult& result, std::ostream& os);

/// Manufactured-solution convergence orders at t = 1 for one gamma:
/// a dyadic spatial sweep at a tiny fixed dt, a dyadic uniform temporal sweep
/// at a fine dx, and a temporal sweep over random non-uniform meshes whose
/// largest step halves per level.
ExperimentResult convergence_study(double gamma, int refinement_levels,
                                   unsigned seed = 20110901);

/// Randomized perturbation-decay trials of the implicit scheme (F = 0, zero
/// boundaries): every 2-norm ratio must stay at or below 1 + 1e-10. Includes a
/// paired explicit-scheme witness that blows past 1e3 under dt = dx^2.
ExperimentResult stability_suite(int trials, unsigned seed);

/// Largest 2-norm growth ||v^(n)||/||v^(0)|| over a prescribed mesh with
/// initial data v0, F = 0, and zero boundaries. Returns 0 for v0 == 0.
double perturbation_growth(const SpatialGrid& grid, double gamma,
                           std::span<const double> dts, std::span<const double> v0,
                           SchemeKind scheme);

/// Point-source dispersion run (gamma = 1/2, K = 1, x in [-10,10], N = 100,
/// unit injections at x = 0 for every integer time): adaptive policy against
/// fixed dt = 0.001, with step counts, wall-time speedup, and probe-error
/// comparison against the exact superposition.
ExperimentResult point_source_experiment(const TimestepPolicy& policy, double t_end);

/// Wall-clock scaling over n_steps uniform steps: cumulative cost must fit a
/// quadratic and the per-step cost must roughly double from n/2 to n.
ExperimentResult cost_scaling(std::size_t n_steps);

}  // namespace fracdiff
