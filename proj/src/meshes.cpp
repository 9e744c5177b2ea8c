#include "fracdiff/meshes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracdiff {

SpatialGrid::SpatialGrid(int cells) : cells_(cells), h_(0.0) {
    if (cells < 2)
        throw std::invalid_argument("SpatialGrid: need at least 2 cells, got " +
                                    std::to_string(cells));
    h_ = 1.0 / cells;
    nodes_.resize(static_cast<std::size_t>(cells) + 1);
    for (int i = 0; i <= cells; ++i)
        nodes_[static_cast<std::size_t>(i)] = static_cast<double>(i) / cells;
}

TemporalMesh::TemporalMesh(std::vector<double> points, MeshKind kind, double grading)
    : points_(std::move(points)), kind_(kind), grading_(grading) {
    if (points_.size() < 2)
        throw std::invalid_argument("TemporalMesh: need at least one step");
    if (points_.front() != 0.0)
        throw std::invalid_argument("TemporalMesh: first point must be 0");
    taus_.resize(points_.size() - 1);
    for (std::size_t n = 1; n < points_.size(); ++n) {
        const double tau = points_[n] - points_[n - 1];
        if (!(tau > 0.0))
            throw std::invalid_argument("TemporalMesh: points must be strictly increasing");
        taus_[n - 1] = tau;
    }
    tau_max_ = *std::max_element(taus_.begin(), taus_.end());
}

TemporalMesh TemporalMesh::uniform(double final_time, int steps) {
    if (!(final_time > 0.0))
        throw std::invalid_argument("uniform_time_mesh: final time must be positive");
    if (steps < 1)
        throw std::invalid_argument("uniform_time_mesh: need N >= 1");
    std::vector<double> points(static_cast<std::size_t>(steps) + 1);
    for (int n = 0; n < steps; ++n)
        points[static_cast<std::size_t>(n)] = final_time * n / steps;
    points.back() = final_time;
    return TemporalMesh(std::move(points), MeshKind::Uniform, 1.0);
}

TemporalMesh TemporalMesh::graded(double final_time, int steps, double grading) {
    if (!(grading >= 1.0))
        throw std::invalid_argument("graded_time_mesh: grading exponent must be >= 1");
    if (grading == 1.0)
        return uniform(final_time, steps);
    if (!(final_time > 0.0))
        throw std::invalid_argument("graded_time_mesh: final time must be positive");
    if (steps < 1)
        throw std::invalid_argument("graded_time_mesh: need N >= 1");
    std::vector<double> points(static_cast<std::size_t>(steps) + 1);
    for (int n = 0; n < steps; ++n)
        points[static_cast<std::size_t>(n)] =
            final_time * std::pow(static_cast<double>(n) / steps, grading);
    points.back() = final_time;
    return TemporalMesh(std::move(points), MeshKind::Graded, grading);
}

TemporalMesh TemporalMesh::from_points(std::vector<double> points) {
    return TemporalMesh(std::move(points), MeshKind::Custom, 0.0);
}

} // namespace fracdiff
