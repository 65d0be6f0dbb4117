#pragma once

#include <cstddef>

#include "fracdiff/types.hpp"

namespace fracdiff {

/// Caputo derivative of order gamma of t^p, evaluated in closed form:
///   Gamma(p+1) / Gamma(p+1-gamma) * t^{p-gamma}.
/// Requires t >= 0, p >= 1, gamma in (0, 1).
double caputo_of_power(double t, double p, double gamma);

/// Problem with a known exact solution, used for convergence measurements:
///   u(x,t) = (1 + t^2) sin(pi x) on [0, 1], zero Dirichlet boundaries,
/// with the forcing chosen so the subdiffusion equation holds exactly.
struct ManufacturedProblem {
    SpaceTimeFunction exact_u;
    SpaceTimeFunction forcing;
    ProblemSpec problem;
};

ManufacturedProblem make_manufactured(double gamma, double k_coeff);

struct PropagatorValue {
    double value = 0.0;
    bool tail_underflow = false;   // series skipped: the far-tail envelope is below tol
    std::size_t terms = 0;
};

/// Free-space point-source solution (Green function) of the subdiffusion
/// equation, evaluated through its power series in z = |x| / sqrt(K t^gamma):
///   G(x,t) = (4 K t^gamma)^{-1/2} sum_k (-z)^k / (k! Gamma(1 - gamma(k+1)/2)).
/// Terms whose Gamma argument sits on a pole contribute zero. gamma = 1 is
/// accepted and reproduces the Gaussian heat kernel. Requires t > 0.
PropagatorValue propagator_series(double x, double t, double gamma, double k_coeff,
                                  double tol);

/// Value-only wrapper; throws std::runtime_error if the series fails to
/// converge within 10^4 terms.
double propagator(double x, double t, double gamma, double k_coeff, double tol = 1e-12);

enum class LimitSide { Left, Right };

/// Superposed solution for unit point sources released at t = 0, 1, 2, ...:
///   u(x,t) = sum_{k=0}^{floor(t)} G(x, t - k).
/// At an integer t the left limit excludes the just-released delta; the right
/// limit at x = 0 is not finite and returns +infinity.
double point_source_exact(double x, double t, double gamma, double k_coeff,
                          LimitSide side = LimitSide::Left, double tol = 1e-12);

}  // namespace fracdiff
