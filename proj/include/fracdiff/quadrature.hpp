#pragma once

#include "fracdiff/meshes.hpp"

#include <span>
#include <vector>

namespace fracdiff {

struct ProblemSpec;

/// Kernel integrals seen from level n:
///   a_k^n = (1/Gamma(alpha)) int_{t_{k-1}}^{t_k} (t_n - s)^{alpha-1} ds,  k = 1..n.
/// weights[k-1] holds a_k^n.
struct WeightRow {
    int level = 0;
    std::vector<double> weights;

    double operator[](int k) const { return weights[static_cast<std::size_t>(k - 1)]; }
};

/// Exact kernel integrals over each subinterval; 0 <= n <= N (n = 0 is empty).
WeightRow weights_row(const TemporalMesh& mesh, double alpha, int level);

/// sum_k a_k^n (g_{k-1} + g_k) / 2 for samples g_0..g_n on the mesh points.
/// Approximates (a_{1-alpha} * g)(t_n); the 1/Gamma(alpha) factor is inside
/// the weights.
double midpoint_convolution(std::span<const double> samples, const WeightRow& row);

/// (a_{1-alpha} * f)(x, t_n). Uses the problem's closed form when it has one,
/// otherwise the midpoint rule on s -> f(x, s).
double f_conv(const ProblemSpec& problem, const TemporalMesh& mesh, double x, int level);

/// Same as f_conv at every node of `nodes`, sharing one weight row.
std::vector<double> f_conv_profile(const ProblemSpec& problem, const TemporalMesh& mesh,
                                   std::span<const double> nodes, const WeightRow& row);

} // namespace fracdiff
