#pragma once

#include <span>
#include <vector>

namespace fracdiff {

/// Uniform grid on [0, 1] with M cells, nodes x_i = i*h.
class SpatialGrid {
public:
    explicit SpatialGrid(int cells);

    int cells() const { return cells_; }
    double h() const { return h_; }
    double node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    std::span<const double> nodes() const { return nodes_; }

private:
    int cells_;
    double h_;
    std::vector<double> nodes_;
};

enum class MeshKind { Uniform, Graded, Custom };

/// Immutable partition 0 = t_0 < t_1 < ... < t_N = T.
///
/// Points come straight from the closed formula of each constructor; the
/// step sizes are differences of stored points, so nothing accumulates.
class TemporalMesh {
public:
    static TemporalMesh uniform(double final_time, int steps);
    /// t_n = T (n/N)^r. r == 1 yields exactly the uniform mesh.
    static TemporalMesh graded(double final_time, int steps, double grading);
    /// Arbitrary strictly increasing points starting at 0.
    static TemporalMesh from_points(std::vector<double> points);

    int steps() const { return static_cast<int>(points_.size()) - 1; }
    double final_time() const { return points_.back(); }
    double point(int n) const { return points_[static_cast<std::size_t>(n)]; }
    std::span<const double> points() const { return points_; }
    /// tau_n = t_n - t_{n-1}, 1 <= n <= N.
    double step(int n) const { return taus_[static_cast<std::size_t>(n - 1)]; }
    std::span<const double> step_sizes() const { return taus_; }
    double tau_max() const { return tau_max_; }
    MeshKind kind() const { return kind_; }
    bool is_uniform() const { return kind_ == MeshKind::Uniform; }
    double grading() const { return grading_; }

private:
    TemporalMesh(std::vector<double> points, MeshKind kind, double grading);

    std::vector<double> points_;
    std::vector<double> taus_;
    double tau_max_ = 0.0;
    MeshKind kind_;
    double grading_;
};

inline TemporalMesh uniform_time_mesh(double final_time, int steps) {
    return TemporalMesh::uniform(final_time, steps);
}

inline TemporalMesh graded_time_mesh(double final_time, int steps, double grading) {
    return TemporalMesh::graded(final_time, steps, grading);
}

} // namespace fracdiff
