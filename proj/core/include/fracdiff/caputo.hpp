#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracdiff/types.hpp"

namespace fracdiff {

/// L1 quadrature weights for the Caputo derivative collocated at t_n on a
/// non-uniform mesh:
///   raw[m]    = T_{m,n} = [(t_n - t_m)^{1-g} - (t_n - t_{m+1})^{1-g}] / (t_{m+1} - t_m)
///   scaled[m] = (t_n - t_{n-1})^g * raw[m]
/// for m = 0..n-1. The last scaled weight is 1 up to rounding, the raw weights
/// are strictly increasing in m, and all entries are positive.
struct CaputoWeights {
    std::size_t step_index = 0;
    std::vector<double> raw;
    std::vector<double> scaled;
};

/// Requires 1 <= n < mesh.size() and gamma in (0, 1).
CaputoWeights compute_weights(const TemporalMesh& mesh, std::size_t n, double gamma);

/// L1 estimate of the Caputo derivative of order gamma of y at t_n,
///   (1/Gamma(2-g)) * sum_m T_{m,n} [y(t_{m+1}^-) - y(t_m^+)],
/// from one-sided samples y(t_m^-) = samples_left[m], y(t_m^+) = samples_right[m].
/// Exact for piecewise-linear y; first order in the largest step otherwise.
double caputo_l1(std::span<const double> samples_left,
                 std::span<const double> samples_right,
                 const TemporalMesh& mesh, std::size_t n, double gamma);

/// Memory operator of the implicit scheme, per node j:
///   M U_j^{(n)} = V_j^{(n-1)} - sum_{m=0}^{n-2} scaled[m] * (U_j^{(m+1)} - V_j^{(m)}).
/// The sum is empty at n = 1. Requires history levels 0..n-1 to be present.
std::vector<double> memory_operator(const SolutionHistory& history,
                                    const CaputoWeights& weights,
                                    std::size_t n);

}  // namespace fracdiff
