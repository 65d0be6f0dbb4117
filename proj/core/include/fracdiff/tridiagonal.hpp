#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracdiff {

/// Tridiagonal system over the interior unknowns. All four vectors have the
/// same length; sub[0] and super[size-1] are zero. The builder below always
/// produces a strictly diagonally dominant matrix (|diag| > |sub| + |super|).
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> super;
    std::vector<double> rhs;

    std::size_t size() const { return diag.size(); }
};

/// Assembles row j of the implicit step,
///   -s_n U_{j-1} + (1 + 2 s_n) U_j - s_n U_{j+1} = m_vector[j] + f_tilde[j],
/// with the Dirichlet boundary values folded into the first and last rhs rows.
/// m_vector and f_tilde cover interior nodes only.
TridiagonalSystem build_system(double s_n,
                               std::span<const double> m_vector,
                               std::span<const double> f_tilde,
                               double bc_left, double bc_right);

/// Thomas algorithm, O(size). The input system is left unmodified.
/// Throws std::runtime_error if a pivot magnitude falls below 1e-14
/// (cannot happen for diagonally dominant input; guards corrupted systems).
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

}  // namespace fracdiff
