#include "fracdiff/caputo.hpp"

#include <cmath>
#include <stdexcept>

namespace fracdiff {

CaputoWeights compute_weights(const TemporalMesh& mesh, std::size_t n, double gamma) {
    if (n < 1 || n >= mesh.size()) {
        throw std::invalid_argument("compute_weights: step index out of range");
    }
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw std::invalid_argument("compute_weights: gamma must lie in (0, 1)");
    }

    CaputoWeights w;
    w.step_index = n;
    w.raw.resize(n);
    w.scaled.resize(n);

    const double tn = mesh[n];
    const double scale = std::pow(mesh.dt(n), gamma);
    const double one_minus_gamma = 1.0 - gamma;
    for (std::size_t m = 0; m < n; ++m) {
        const double za = tn - mesh[m];        // > 0
        const double zb = tn - mesh[m + 1];    // 0 at m = n-1
        const double t =
            (std::pow(za, one_minus_gamma) - std::pow(zb, one_minus_gamma)) / (mesh[m + 1] - mesh[m]);
        w.raw[m] = t;
        w.scaled[m] = scale * t;
    }
    return w;
}

double caputo_l1(std::span<const double> samples_left,
                 std::span<const double> samples_right,
                 const TemporalMesh& mesh, std::size_t n, double gamma) {
    if (samples_left.size() != samples_right.size()) {
        throw std::invalid_argument("caputo_l1: sample arrays differ in length");
    }
    if (n < 1 || samples_left.size() < n + 1) {
        throw std::invalid_argument("caputo_l1: need samples at t_0..t_n");
    }
    const CaputoWeights w = compute_weights(mesh, n, gamma);

    double acc = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        acc += w.raw[m] * (samples_left[m + 1] - samples_right[m]);
    }
    return acc / std::tgamma(2.0 - gamma);
}

std::vector<double> memory_operator(const SolutionHistory& history,
                                    const CaputoWeights& weights,
                                    std::size_t n) {
    if (n < 1 || history.size() < n) {
        throw std::invalid_argument("memory_operator: history does not cover levels 0..n-1");
    }
    if (weights.step_index != n || weights.scaled.size() != n) {
        throw std::invalid_argument("memory_operator: weights were computed for a different step");
    }

    const std::size_t n_nodes = history.n_nodes();
    std::vector<double> m_vec = history.v_right(n - 1);

    // Descending m keeps adjacent history rows hot in cache.
    for (std::size_t m = n - 1; m-- > 0;) {
        const double c = weights.scaled[m];
        const std::vector<double>& u_next = history.u_left(m + 1);
        const std::vector<double>& v_prev = history.v_right(m);
        for (std::size_t j = 0; j < n_nodes; ++j) {
            m_vec[j] -= c * (u_next[j] - v_prev[j]);
        }
    }
    return m_vec;
}

}  // namespace fracdiff
