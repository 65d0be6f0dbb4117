#include "fracdiff/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracdiff {

void ProblemSpec::validate() const {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw std::invalid_argument("gamma must lie in (0, 1), got " + std::to_string(gamma));
    }
    if (!(k_coeff > 0.0)) {
        throw std::invalid_argument("k_coeff must be > 0, got " + std::to_string(k_coeff));
    }
    if (!(x_left < x_right)) {
        throw std::invalid_argument("domain requires x_left < x_right");
    }
    for (const auto& imp : impulses) {
        if (!(imp.time >= 0.0)) {
            throw std::invalid_argument("impulse time must be >= 0");
        }
        if (!(imp.location >= x_left && imp.location <= x_right)) {
            throw std::invalid_argument("impulse location outside the domain");
        }
    }
}

SpatialGrid::SpatialGrid(double x_left, double x_right, std::size_t n_intervals)
    : x_left_(x_left), x_right_(x_right), n_intervals_(n_intervals) {
    if (!(x_left < x_right)) {
        throw std::invalid_argument("grid requires x_left < x_right");
    }
    if (n_intervals < 2) {
        throw std::invalid_argument("grid requires n_intervals >= 2");
    }
    dx_ = (x_right - x_left) / static_cast<double>(n_intervals);
}

std::size_t SpatialGrid::nearest_node(double x) const {
    const double half = dx_ / 2.0;
    if (x < x_left_ - half || x > x_right_ + half) {
        throw std::invalid_argument("position outside the spatial domain");
    }
    const double j = std::round((x - x_left_) / dx_);
    const auto idx = static_cast<std::size_t>(std::max(0.0, j));
    return std::min(idx, n_intervals_);
}

SpatialGrid make_grid(double x_left, double x_right, std::size_t n_intervals) {
    return SpatialGrid(x_left, x_right, n_intervals);
}

void TemporalMesh::append(double dt) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("timestep must be > 0 to keep the mesh strictly increasing");
    }
    times_.push_back(times_.back() + dt);
}

void SolutionHistory::append(std::vector<double> u) {
    if (u.size() != n_nodes_) {
        throw std::invalid_argument("history level has wrong node count");
    }
    u_.push_back(std::move(u));
    v_.emplace_back(std::nullopt);
}

std::vector<double>& SolutionHistory::v_back() {
    if (u_.empty()) {
        throw std::logic_error("history is empty");
    }
    auto& slot = v_.back();
    if (!slot) {
        slot = u_.back();
    }
    return *slot;
}

}  // namespace fracdiff
