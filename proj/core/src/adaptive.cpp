#include "fracdiff/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracdiff {

void TimestepPolicy::validate() const {
    if (kind == Kind::Fixed) {
        if (!(dt_fixed > 0.0)) {
            throw std::invalid_argument("policy: dt_fixed must be > 0");
        }
        return;
    }
    if (!(dt_min > 0.0 && dt_min <= dt_max)) {
        throw std::invalid_argument("policy: requires 0 < dt_min <= dt_max");
    }
    if (!(curvature_scale > 0.0)) {
        throw std::invalid_argument("policy: curvature_scale must be > 0");
    }
}

TimestepPolicy TimestepPolicy::fixed_step(double dt) {
    TimestepPolicy p;
    p.kind = Kind::Fixed;
    p.dt_fixed = dt;
    p.validate();
    return p;
}

TimestepPolicy TimestepPolicy::curvature(std::size_t probe_node, double dt_min,
                                         double dt_max, double curvature_scale) {
    TimestepPolicy p;
    p.kind = Kind::CurvatureAdaptive;
    p.probe_node = probe_node;
    p.dt_min = dt_min;
    p.dt_max = dt_max;
    p.curvature_scale = curvature_scale;
    p.validate();
    return p;
}

double curvature_probe(std::span<const double> latest, const SpatialGrid& grid,
                       std::size_t probe_node) {
    if (probe_node == 0 || probe_node >= grid.n_intervals()) {
        throw std::invalid_argument("curvature_probe: probe node must be interior");
    }
    if (latest.size() != grid.n_nodes()) {
        throw std::invalid_argument("curvature_probe: vector size does not match the grid");
    }
    const double dx = grid.dx();
    return (latest[probe_node - 1] - 2.0 * latest[probe_node] + latest[probe_node + 1]) / (dx * dx);
}

double next_dt(const TimestepPolicy& policy, double g) {
    if (policy.kind == TimestepPolicy::Kind::Fixed) {
        return policy.dt_fixed;
    }
    const double a = std::abs(g) / policy.curvature_scale;
    const double th = std::tanh(a);
    if (th == 0.0) {
        return policy.dt_max;   // coth -> infinity, clamped
    }
    return std::min(policy.dt_min / th, policy.dt_max);
}

}  // namespace fracdiff
