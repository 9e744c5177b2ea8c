#pragma once

#include <span>
#include <vector>

namespace fracdiff {

/// Values at the M+1 nodes of a SpatialGrid. Dirichlet functions keep
/// both end entries at zero.
using GridFunction = std::vector<double>;

/// Compact averaging operator: (v_{i+1} + 10 v_i + v_{i-1}) / 12 on interior
/// nodes, identity at i = 0 and i = M.
GridFunction apply_hh(std::span<const double> v);

/// Centered second difference on interior nodes; boundary entries are zero.
GridFunction apply_delta_x2(std::span<const double> v, double h);

/// Discrete L2 norm sqrt(h * sum_{i=1}^{M-1} v_i^2).
double norm_l2h(std::span<const double> v, double h);

/// Discrete H1 semi-norm built from the half-node slopes (v_i - v_{i-1}) / h.
double norm_h1_semi(std::span<const double> v, double h);

/// <v, w>_A = <delta_x v, delta_x w>_h - (h^2/12) <delta_x^2 v, delta_x^2 w>_h.
double inner_a(std::span<const double> v, std::span<const double> w, double h);

/// sqrt(<v, v>_A). Throws std::logic_error if the radicand is below -1e-12.
double norm_a(std::span<const double> v, double h);

/// Tridiagonal system of size n: diag has n entries, sub and super n-1.
/// Row i reads sub[i-1] w_{i-1} + diag[i] w_i + super[i] w_{i+1} = rhs[i].
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> super;
    std::vector<double> rhs;
};

/// Thomas elimination without pivoting. Requires strict diagonal dominance
/// (std::invalid_argument otherwise); a vanishing pivot raises
/// std::runtime_error.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys);

} // namespace fracdiff
