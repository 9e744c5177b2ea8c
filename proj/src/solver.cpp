#include "fracdiff/solver.hpp"

#include "fracdiff/quadrature.hpp"
#include "fracdiff/specialfn.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracdiff {

namespace {

int next_level(const SolutionLattice& state) {
    const int n = state.computed_levels();
    if (n < 1)
        throw std::logic_error("step: lattice has no initial level");
    if (n > state.mesh.steps())
        throw std::out_of_range("step: lattice already reaches the final time");
    return n;
}

void check_shapes(const SolutionLattice& state) {
    const auto expected = static_cast<std::size_t>(state.grid.cells()) + 1;
    for (const auto& level : state.levels)
        if (level.size() != expected)
            throw std::invalid_argument("step: level length does not match the spatial grid");
}

GridFunction with_dirichlet_ends(const std::vector<double>& interior) {
    GridFunction u(interior.size() + 2, 0.0);
    std::copy(interior.begin(), interior.end(), u.begin() + 1);
    return u;
}

} // namespace

std::string_view to_string(SchemeKind kind) {
    switch (kind) {
    case SchemeKind::Transformed: return "transformed";
    case SchemeKind::L1Baseline: return "l1";
    }
    return "unknown";
}

SchemeKind parse_scheme(std::string_view name) {
    if (name == "transformed")
        return SchemeKind::Transformed;
    if (name == "l1")
        return SchemeKind::L1Baseline;
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

GridFunction sample_initial(const ProblemSpec& problem, const SpatialGrid& grid) {
    GridFunction u(grid.nodes().size());
    for (int i = 0; i <= grid.cells(); ++i)
        u[static_cast<std::size_t>(i)] = problem.phi(grid.node(i));
    if (std::abs(u.front()) > 1e-12 || std::abs(u.back()) > 1e-12)
        throw std::invalid_argument("initial data must vanish at x = 0 and x = 1");
    u.front() = 0.0;
    u.back() = 0.0;
    return u;
}

double l1_weight(int j, double alpha) {
    return std::pow(j + 1.0, 1.0 - alpha) - std::pow(static_cast<double>(j), 1.0 - alpha);
}

TridiagonalSystem assemble_scheme_system(int cells, double h, double c, std::vector<double> rhs) {
    const double ratio = c / (h * h);
    const double off = 1.0 / 12.0 - ratio;
    const double diag = 10.0 / 12.0 + 2.0 * ratio;
    assert(std::abs(diag) - 2.0 * std::abs(off) >= 2.0 / 3.0 - 1e-12);
    const auto interior = static_cast<std::size_t>(cells - 1);
    if (rhs.size() != interior)
        throw std::invalid_argument("assemble_scheme_system: rhs must cover interior nodes only");
    TridiagonalSystem sys;
    sys.diag.assign(interior, diag);
    sys.sub.assign(interior - 1, off);
    sys.super.assign(interior - 1, off);
    sys.rhs = std::move(rhs);
    return sys;
}

GridFunction step_transformed(const SolutionLattice& state, const ProblemSpec& problem) {
    const int n = next_level(state);
    check_shapes(state);
    const double h = state.grid.h();
    const WeightRow row = weights_row(state.mesh, state.alpha, n);

    // History: sum_{k=1}^{n-1} a_k (D u^k + D u^{k-1})/2 + (a_n/2) D u^{n-1}
    // = D( sum_{k=0}^{n-1} w_k u^k ) with w_0 = a_1/2, w_k = (a_k + a_{k+1})/2.
    const std::size_t size = state.levels.front().size();
    GridFunction weighted(size, 0.0);
    for (int k = 0; k < n; ++k) {
        const double w = 0.5 * ((k >= 1 ? row[k] : 0.0) + row[k + 1]);
        const auto& u = state.levels[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < size; ++i)
            weighted[i] += w * u[i];
    }

    const GridFunction history = apply_delta_x2(weighted, h);
    const GridFunction h_phi = apply_hh(state.levels.front());
    const GridFunction h_forcing = apply_hh(f_conv_profile(problem, state.mesh, state.grid.nodes(), row));

    std::vector<double> rhs(size - 2);
    for (std::size_t i = 1; i + 1 < size; ++i)
        rhs[i - 1] = h_phi[i] + h_forcing[i] + history[i];

    const double implicit = 0.5 * row[n];
    return with_dirichlet_ends(
        solve_tridiagonal(assemble_scheme_system(state.grid.cells(), h, implicit, std::move(rhs))));
}

GridFunction step_l1(const SolutionLattice& state, const ProblemSpec& problem) {
    if (!state.mesh.is_uniform())
        throw std::invalid_argument("L1 baseline requires a uniform time mesh");
    const int n = next_level(state);
    check_shapes(state);
    const double alpha = state.alpha;
    const double h = state.grid.h();
    const double tau = state.mesh.step(1);
    const double scale = gamma(2.0 - alpha) * std::pow(tau, alpha);

    // sum_{k=1}^{n-1} (b_{n-k-1} - b_{n-k}) u^k + b_{n-1} u^0
    const std::size_t size = state.levels.front().size();
    GridFunction memory(size, 0.0);
    for (int k = 0; k < n; ++k) {
        const double w = k == 0 ? l1_weight(n - 1, alpha)
                                : l1_weight(n - k - 1, alpha) - l1_weight(n - k, alpha);
        const auto& u = state.levels[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < size; ++i)
            memory[i] += w * u[i];
    }

    const double t_n = state.mesh.point(n);
    GridFunction forcing(size);
    for (std::size_t i = 0; i < size; ++i)
        forcing[i] = problem.f(state.grid.node(static_cast<int>(i)), t_n);
    const GridFunction h_memory = apply_hh(memory);
    const GridFunction h_forcing = apply_hh(forcing);

    // Multiply through by scale: (b_0 H_h - scale D) u^n = H_h memory + scale H_h f.
    std::vector<double> rhs(size - 2);
    for (std::size_t i = 1; i + 1 < size; ++i)
        rhs[i - 1] = h_memory[i] + scale * h_forcing[i];
    return with_dirichlet_ends(
        solve_tridiagonal(assemble_scheme_system(state.grid.cells(), h, scale, std::move(rhs))));
}

SolutionLattice solve(const ProblemSpec& problem, const SpatialGrid& grid,
                      const TemporalMesh& mesh, SchemeKind scheme, std::optional<int> through_level) {
    const int last = through_level.value_or(mesh.steps());
    if (last < 0 || last > mesh.steps())
        throw std::out_of_range("solve: through_level outside the mesh");
    if (!(problem.alpha > 0.0 && problem.alpha < 1.0))
        throw std::invalid_argument("solve: alpha must lie in (0, 1)");
    if (scheme == SchemeKind::L1Baseline && !mesh.is_uniform())
        throw std::invalid_argument("L1 baseline requires a uniform time mesh");

    SolutionLattice lattice{grid, mesh, problem.alpha, {}};
    lattice.levels.reserve(static_cast<std::size_t>(mesh.steps()) + 1);
    lattice.levels.push_back(sample_initial(problem, grid));
    for (int n = 1; n <= last; ++n) {
        GridFunction next = scheme == SchemeKind::Transformed ? step_transformed(lattice, problem)
                                                              : step_l1(lattice, problem);
        lattice.levels.push_back(std::move(next));
    }
    return lattice;
}

} // namespace fracdiff
