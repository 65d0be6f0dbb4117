#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracdiff/adaptive.hpp"
#include "fracdiff/types.hpp"

namespace fracdiff {

enum class SchemeKind { Implicit, Explicit };

struct StepReport {
    std::size_t step_index = 0;
    double time = 0.0;
    double dt_used = 0.0;
    double s_n = 0.0;
    bool impulse_applied = false;
};

/// s_n = Gamma(2-gamma) * k_coeff * dt^gamma / dx^2, the stencil coefficient of
/// the implicit step.
double stencil_coefficient(double gamma, double k_coeff, double dx, double dt);

/// Advances one implicit step of size dt: appends t_n to the mesh, forms the
/// memory term and the scaled source, solves the tridiagonal system, appends
/// U^{(n)} to the history, and fires any impulses scheduled (to within rounding)
/// at t_n onto the right limit V^{(n)}.
StepReport implicit_step(const ProblemSpec& problem, const SpatialGrid& grid,
                         TemporalMesh& mesh, SolutionHistory& history, double dt);

/// Explicit variant: Caputo derivative collocated at the new time, Laplacian
/// evaluated on the previous (post-impulse) level. No linear solve, and no
/// stability guarantee.
StepReport explicit_step(const ProblemSpec& problem, const SpatialGrid& grid,
                         TemporalMesh& mesh, SolutionHistory& history, double dt);

/// Adds weight/dx to the right limit of the latest level at the grid node
/// nearest to location (the discretized Dirac delta).
void apply_impulse(SolutionHistory& history, const SpatialGrid& grid,
                   double location, double weight);

struct RunSummary {
    std::size_t steps = 0;
    double wall_ms = 0.0;
    std::vector<double> step_ms;
    double dt_min_used = 0.0;
    double dt_max_used = 0.0;
};

struct RunResult {
    SolutionHistory history;
    TemporalMesh mesh;
    RunSummary summary;
};

/// Steps the problem from t = 0 to t_end, asking the policy for each dt and
/// clamping so the mesh lands exactly on impulse times and on t_end. The
/// initial level is U^{(0)} = V^{(0)} = IC, modified by impulses at t = 0.
/// Throws if the step count would exceed max_steps.
RunResult run(const ProblemSpec& problem, const SpatialGrid& grid,
              const TimestepPolicy& policy, double t_end,
              SchemeKind scheme = SchemeKind::Implicit,
              std::size_t max_steps = 1'000'000);

/// Steps through a prescribed sequence of dt values (no policy, no clamping).
RunResult run_prescribed(const ProblemSpec& problem, const SpatialGrid& grid,
                         std::span<const double> dts,
                         SchemeKind scheme = SchemeKind::Implicit);

/// Initial level shared by run and run_prescribed.
SolutionHistory initial_history(const ProblemSpec& problem, const SpatialGrid& grid);

}  // namespace fracdiff
