#include "fracdiff/tridiagonal.hpp"

#include <cmath>
#include <stdexcept>

namespace fracdiff {

TridiagonalSystem build_system(double s_n,
                               std::span<const double> m_vector,
                               std::span<const double> f_tilde,
                               double bc_left, double bc_right) {
    if (!(s_n > 0.0)) {
        throw std::invalid_argument("build_system: s_n must be > 0");
    }
    if (m_vector.size() != f_tilde.size() || m_vector.empty()) {
        throw std::invalid_argument("build_system: m_vector and f_tilde must cover the interior nodes");
    }

    const std::size_t n = m_vector.size();
    TridiagonalSystem sys;
    sys.sub.assign(n, -s_n);
    sys.diag.assign(n, 1.0 + 2.0 * s_n);
    sys.super.assign(n, -s_n);
    sys.sub[0] = 0.0;
    sys.super[n - 1] = 0.0;

    sys.rhs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        sys.rhs[i] = m_vector[i] + f_tilde[i];
    }
    sys.rhs[0] += s_n * bc_left;
    sys.rhs[n - 1] += s_n * bc_right;

    // 1 + 2s > 2s for any s > 0: dominance holds by construction.
    for (std::size_t i = 0; i < n; ++i) {
        if (!(std::abs(sys.diag[i]) > std::abs(sys.sub[i]) + std::abs(sys.super[i]))) {
            throw std::logic_error("build_system: diagonal dominance violated");
        }
    }
    return sys;
}

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    const std::size_t n = sys.size();
    if (n == 0 || sys.sub.size() != n || sys.super.size() != n || sys.rhs.size() != n) {
        throw std::invalid_argument("thomas_solve: inconsistent system sizes");
    }
    constexpr double kPivotFloor = 1e-14;

    std::vector<double> c_star(n);
    std::vector<double> x(n);

    if (std::abs(sys.diag[0]) < kPivotFloor) {
        throw std::runtime_error("thomas_solve: vanishing pivot in row 0");
    }
    c_star[0] = sys.super[0] / sys.diag[0];
    x[0] = sys.rhs[0] / sys.diag[0];

    for (std::size_t i = 1; i < n; ++i) {
        const double den = sys.diag[i] - sys.sub[i] * c_star[i - 1];
        if (std::abs(den) < kPivotFloor) {
            throw std::runtime_error("thomas_solve: vanishing pivot in row " + std::to_string(i));
        }
        c_star[i] = sys.super[i] / den;
        x[i] = (sys.rhs[i] - sys.sub[i] * x[i - 1]) / den;
    }

    for (std::size_t i = n - 1; i-- > 0;) {
        x[i] -= c_star[i] * x[i + 1];
    }
    return x;
}

}  // namespace fracdiff
