#pragma once

#include "fracdiff/meshes.hpp"
#include "fracdiff/operators.hpp"
#include "fracdiff/problems.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fracdiff {

enum class SchemeKind {
    Transformed, ///< compact space + midpoint convolution of the Volterra form
    L1Baseline,  ///< compact space + L1 Caputo derivative, uniform meshes only
};

std::string_view to_string(SchemeKind kind);
SchemeKind parse_scheme(std::string_view name);

/// u^0..u^N on grid x mesh. levels.size() grows as stepping proceeds.
struct SolutionLattice {
    SpatialGrid grid;
    TemporalMesh mesh;
    double alpha;
    std::vector<GridFunction> levels;

    int computed_levels() const { return static_cast<int>(levels.size()); }
    const GridFunction& final_level() const { return levels.back(); }
};

/// phi sampled on the grid, end values pinned to zero. Throws
/// std::invalid_argument if phi is visibly nonzero at x = 0 or 1.
GridFunction sample_initial(const ProblemSpec& problem, const SpatialGrid& grid);

/// Next level of the transformed scheme:
///   (H_h - (a_n^n/2) dxx) u^n = H_h phi + H_h f_{1-alpha}(t_n)
///       + sum_{k=1}^{n-1} a_k^n dxx (u^k + u^{k-1})/2 + (a_n^n/2) dxx u^{n-1}
GridFunction step_transformed(const SolutionLattice& state, const ProblemSpec& problem);

/// Next level of the L1 baseline. Throws std::invalid_argument on a
/// non-uniform mesh.
GridFunction step_l1(const SolutionLattice& state, const ProblemSpec& problem);

/// b_j = (j+1)^{1-alpha} - j^{1-alpha}.
double l1_weight(int j, double alpha);

/// Interior system (H_h - c dxx) with Dirichlet ends removed. Asserts the
/// dominance margin |10/12 + 2c/h^2| - 2|1/12 - c/h^2| >= 2/3.
TridiagonalSystem assemble_scheme_system(int cells, double h, double c, std::vector<double> rhs);

/// Steps from u^0 = phi through level `through_level` (default: the whole
/// mesh). through_level = 0 returns just the sampled initial data.
SolutionLattice solve(const ProblemSpec& problem, const SpatialGrid& grid,
                      const TemporalMesh& mesh, SchemeKind scheme,
                      std::optional<int> through_level = std::nullopt);

} // namespace fracdiff
