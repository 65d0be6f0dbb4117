#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fracdiff/adaptive.hpp"
#include "fracdiff/scheme.hpp"
#include "fracdiff/types.hpp"

namespace fracdiff {

/// Flat key = value run configuration ('#' starts a comment). Recognized keys:
///   gamma, k_coeff, x_left, x_right, n_intervals, scheme (implicit|explicit),
///   policy (fixed|adaptive), dt_fixed, dt_min, dt_max, curvature_scale,
///   probe_node, t_end, impulse_times (comma-separated), impulse_weight,
///   snapshot_times (comma-separated), seed, out_dir.
/// Impulses are released at x = 0; probe_node defaults to the middle node.
struct RunConfig {
    double gamma = 0.5;
    double k_coeff = 1.0;
    double x_left = -10.0;
    double x_right = 10.0;
    std::size_t n_intervals = 100;
    SchemeKind scheme = SchemeKind::Implicit;
    TimestepPolicy policy = TimestepPolicy::curvature(50);
    double t_end = 1.0;
    std::vector<double> impulse_times;
    double impulse_weight = 1.0;
    std::vector<double> snapshot_times;
    unsigned long seed = 42;
    std::string out_dir = ".";

    /// Throws std::invalid_argument naming the violated bound.
    void validate() const;

    ProblemSpec problem() const;
    SpatialGrid grid() const;
};

/// Both throw std::invalid_argument with a line/key-specific message.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace fracdiff
