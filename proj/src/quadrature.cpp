#include "fracdiff/quadrature.hpp"

#include "fracdiff/problems.hpp"
#include "fracdiff/specialfn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracdiff {

WeightRow weights_row(const TemporalMesh& mesh, double alpha, int level) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("weights_row: alpha must lie in (0, 1)");
    if (level < 0 || level > mesh.steps())
        throw std::out_of_range("weights_row: level " + std::to_string(level) + " outside mesh");

    WeightRow row;
    row.level = level;
    row.weights.resize(static_cast<std::size_t>(level));
    const double scale = 1.0 / gamma(alpha + 1.0);
    const double t_n = mesh.point(level);
    // (t_n - s)^alpha at the left end of each subinterval, reused as the
    // right end of the previous one.
    double left = std::pow(t_n - mesh.point(0), alpha);
    for (int k = 1; k <= level; ++k) {
        const double right = k == level ? 0.0 : std::pow(t_n - mesh.point(k), alpha);
        row.weights[static_cast<std::size_t>(k - 1)] = (left - right) * scale;
        left = right;
    }
    return row;
}

double midpoint_convolution(std::span<const double> samples, const WeightRow& row) {
    if (samples.size() != static_cast<std::size_t>(row.level) + 1)
        throw std::invalid_argument("midpoint_convolution: expected " +
                                    std::to_string(row.level + 1) + " samples, got " +
                                    std::to_string(samples.size()));
    double sum = 0.0;
    for (int k = 1; k <= row.level; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        sum += row[k] * 0.5 * (samples[ku - 1] + samples[ku]);
    }
    return sum;
}

double f_conv(const ProblemSpec& problem, const TemporalMesh& mesh, double x, int level) {
    if (problem.exact_f_conv)
        return (*problem.exact_f_conv)(x, mesh.point(level));
    const WeightRow row = weights_row(mesh, problem.alpha, level);
    std::vector<double> samples(static_cast<std::size_t>(level) + 1);
    for (int k = 0; k <= level; ++k)
        samples[static_cast<std::size_t>(k)] = problem.f(x, mesh.point(k));
    return midpoint_convolution(samples, row);
}

std::vector<double> f_conv_profile(const ProblemSpec& problem, const TemporalMesh& mesh,
                                   std::span<const double> nodes, const WeightRow& row) {
    std::vector<double> out(nodes.size());
    const double t_n = mesh.point(row.level);
    if (problem.exact_f_conv) {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            out[i] = (*problem.exact_f_conv)(nodes[i], t_n);
        return out;
    }
    std::vector<double> samples(static_cast<std::size_t>(row.level) + 1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (int k = 0; k <= row.level; ++k)
            samples[static_cast<std::size_t>(k)] = problem.f(nodes[i], mesh.point(k));
        out[i] = midpoint_convolution(samples, row);
    }
    return out;
}

} // namespace fracdiff
