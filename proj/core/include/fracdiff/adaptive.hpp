#pragma once

#include <cstddef>
#include <span>

#include "fracdiff/types.hpp"

namespace fracdiff {

/// Timestep selection rule. The curvature-adaptive kind implements
///   dt = min(dt_min * coth(|g| / curvature_scale), dt_max)
/// where g is the centred second-difference estimate at probe_node,
/// evaluated on the post-impulse state of the latest level.
struct TimestepPolicy {
    enum class Kind { Fixed, CurvatureAdaptive };

    Kind kind = Kind::CurvatureAdaptive;
    double dt_fixed = 1e-3;
    double dt_min = 1e-4;
    double dt_max = 0.02;
    double curvature_scale = 1000.0;
    std::size_t probe_node = 0;

    void validate() const;

    static TimestepPolicy fixed_step(double dt);
    static TimestepPolicy curvature(std::size_t probe_node,
                                    double dt_min = 1e-4,
                                    double dt_max = 0.02,
                                    double curvature_scale = 1000.0);
};

/// g = (U_{j-1} - 2 U_j + U_{j+1}) / dx^2 at an interior probe node.
double curvature_probe(std::span<const double> latest, const SpatialGrid& grid,
                       std::size_t probe_node);

/// Next step size for the given curvature estimate. Total: g = 0 resolves to
/// dt_max (the coth -> infinity limit clamps there).
double next_dt(const TimestepPolicy& policy, double g);

}  // namespace fracdiff
