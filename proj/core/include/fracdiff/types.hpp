#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace fracdiff {

using TimeFunction = std::function<double(double)>;
using SpaceFunction = std::function<double(double)>;
using SpaceTimeFunction = std::function<double(double, double)>;

/// A point injection weight * delta(x - location) released at a fixed time.
struct Impulse {
    double time = 0.0;
    double location = 0.0;
    double weight = 1.0;
};

/// Subdiffusion problem on [x_left, x_right]:
///   d^gamma u/dt^gamma - k_coeff * u_xx = source(x,t) + impulses,  0 < gamma < 1,
/// with Dirichlet boundary values and an initial condition at t = 0.
/// Empty std::function fields mean identically zero.
struct ProblemSpec {
    double gamma = 0.5;
    double k_coeff = 1.0;
    double x_left = 0.0;
    double x_right = 1.0;
    TimeFunction bc_left;
    TimeFunction bc_right;
    SpaceFunction ic;
    SpaceTimeFunction source;   // smooth part of F only; deltas go in impulses
    std::vector<Impulse> impulses;

    /// Throws std::invalid_argument naming the violated bound.
    void validate() const;

    double boundary_left(double t) const { return bc_left ? bc_left(t) : 0.0; }
    double boundary_right(double t) const { return bc_right ? bc_right(t) : 0.0; }
    double initial(double x) const { return ic ? ic(x) : 0.0; }
    double source_at(double x, double t) const { return source ? source(x, t) : 0.0; }
};

/// Uniform spatial mesh with N intervals, nodes x_j = x_left + j*dx, j = 0..N.
class SpatialGrid {
public:
    SpatialGrid(double x_left, double x_right, std::size_t n_intervals);

    std::size_t n_intervals() const { return n_intervals_; }
    std::size_t n_nodes() const { return n_intervals_ + 1; }
    double dx() const { return dx_; }
    double x_left() const { return x_left_; }
    double x_right() const { return x_right_; }
    double node(std::size_t j) const { return x_left_ + static_cast<double>(j) * dx_; }

    /// Index of the node nearest to x; throws if x lies outside the domain.
    std::size_t nearest_node(double x) const;

private:
    double x_left_;
    double x_right_;
    double dx_;
    std::size_t n_intervals_;
};

SpatialGrid make_grid(double x_left, double x_right, std::size_t n_intervals);

/// Strictly increasing time nodes t_0 = 0 < t_1 < ..., extended append-only.
class TemporalMesh {
public:
    TemporalMesh() : times_{0.0} {}

    std::size_t size() const { return times_.size(); }
    double operator[](std::size_t m) const { return times_[m]; }
    double back() const { return times_.back(); }
    /// t_n - t_{n-1}; requires 1 <= n < size().
    double dt(std::size_t n) const { return times_[n] - times_[n - 1]; }
    std::span<const double> times() const { return times_; }

    /// Appends t_back + dt; throws if dt <= 0.
    void append(double dt);

private:
    std::vector<double> times_;
};

/// Per-step spatial vectors: u_left(m) ~ u(x_j, t_m^-) and v_right(m) ~ u(x_j, t_m^+).
/// The right limit differs from the left one only at impulse times, so it is
/// stored as an override; v_right(m) == u_left(m) whenever no impulse fired at t_m.
class SolutionHistory {
public:
    explicit SolutionHistory(std::size_t n_nodes) : n_nodes_(n_nodes) {}

    std::size_t size() const { return u_.size(); }
    std::size_t n_nodes() const { return n_nodes_; }

    /// Appends a new level with V = U; throws on node-count mismatch.
    void append(std::vector<double> u);

    const std::vector<double>& u_left(std::size_t m) const { return u_[m]; }
    const std::vector<double>& v_right(std::size_t m) const {
        return v_[m] ? *v_[m] : u_[m];
    }
    bool impulse_at(std::size_t m) const { return v_[m].has_value(); }

    /// Mutable right limit of the latest level, materializing the override.
    std::vector<double>& v_back();

private:
    std::size_t n_nodes_;
    std::vector<std::vector<double>> u_;
    std::vector<std::optional<std::vector<double>>> v_;
};

}  // namespace fracdiff
