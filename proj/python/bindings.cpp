#include "fracdiff/harness.hpp"
#include "fracdiff/quadrature.hpp"
#include "fracdiff/specialfn.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fracdiff;

namespace {

std::vector<double> as_vector(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 1)
        throw py::value_error("expected a one-dimensional array");
    return {a.data(), a.data() + a.size()};
}

py::array_t<double> as_array(const std::vector<double>& v) {
    return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

TemporalMesh make_mesh(double final_time, int steps, const std::string& mesh) {
    return parse_mesh(mesh).build(final_time, steps);
}

py::dict solve_py(const std::string& problem, double alpha, int spatial_cells, int time_steps,
                  double final_time, const std::string& scheme, const std::string& mesh) {
    const ProblemSpec p = make_problem(problem, alpha, final_time);
    const SpatialGrid grid(spatial_cells);
    const TemporalMesh t_mesh = make_mesh(final_time, time_steps, mesh);
    SolutionLattice lattice = [&] {
        py::gil_scoped_release release;
        return solve(p, grid, t_mesh, parse_scheme(scheme));
    }();

    const auto rows = static_cast<py::ssize_t>(lattice.levels.size());
    const auto cols = static_cast<py::ssize_t>(grid.cells() + 1);
    py::array_t<double> u({rows, cols});
    auto view = u.mutable_unchecked<2>();
    for (py::ssize_t n = 0; n < rows; ++n)
        for (py::ssize_t i = 0; i < cols; ++i)
            view(n, i) = lattice.levels[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];

    py::dict out;
    out["u"] = u;
    out["x"] = as_array({grid.nodes().begin(), grid.nodes().end()});
    out["t"] = as_array({t_mesh.points().begin(), t_mesh.points().end()});
    if (p.exact_u)
        out["max_error"] = max_lattice_error(lattice, *p.exact_u);
    else
        out["max_error"] = py::none();
    return out;
}

py::list sweep_py(const std::vector<double>& alphas, int spatial_cells, const std::string& time_steps,
                  double final_time, const std::string& scheme, const std::string& mesh,
                  const std::string& problem, const std::string& norm, unsigned threads) {
    SweepConfig cfg;
    cfg.alphas = alphas;
    cfg.spatial_cells = spatial_cells;
    cfg.time_steps = parse_time_steps(time_steps);
    cfg.final_time = final_time;
    cfg.scheme = parse_scheme(scheme);
    cfg.mesh = parse_mesh(mesh);
    cfg.problem_label = problem;
    cfg.norm = parse_norm(norm);
    cfg.threads = threads;
    ConvergenceReport report;
    {
        py::gil_scoped_release release;
        report = run_sweep(cfg);
    }
    py::list rows;
    for (const auto& r : report.rows) {
        py::dict row;
        row["alpha"] = r.alpha;
        row["scheme"] = std::string(to_string(r.scheme));
        row["mesh"] = r.mesh;
        row["M"] = r.spatial_cells;
        row["N"] = r.time_steps;
        row["E1"] = r.error;
        row["rate"] = r.rate ? py::cast(*r.rate) : py::none();
        row["wall_seconds"] = r.wall_seconds;
        rows.append(row);
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_fracdiff, m) {
    m.doc() = "Time-fractional diffusion solver: Volterra-form compact scheme, L1 baseline, "
              "convergence sweeps.";

    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

    m.def("gamma", [](double x) { return fracdiff::gamma(x); }, py::arg("x"));
    m.def("mittag_leffler",
          [](double beta, double z, double tol, int max_terms) {
              return mittag_leffler({beta, z, tol, max_terms});
          },
          py::arg("beta"), py::arg("z"), py::arg("tol") = 1e-14, py::arg("max_terms") = 500);

    m.def("time_mesh",
          [](double final_time, int steps, const std::string& mesh) {
              const auto t = make_mesh(final_time, steps, mesh);
              return as_array({t.points().begin(), t.points().end()});
          },
          py::arg("final_time"), py::arg("steps"), py::arg("mesh") = "uniform");

    m.def("weights_row",
          [](const py::array_t<double>& points, double alpha, int level) {
              const auto mesh = TemporalMesh::from_points(as_vector(points));
              return as_array(weights_row(mesh, alpha, level).weights);
          },
          py::arg("points"), py::arg("alpha"), py::arg("level"),
          "Kernel weights a_k^n, k = 1..level, for the given time points.");

    m.def("apply_hh", [](const py::array_t<double>& v) { return as_array(apply_hh(as_vector(v))); });
    m.def("apply_delta_x2", [](const py::array_t<double>& v, double h) {
        return as_array(apply_delta_x2(as_vector(v), h));
    });
    m.def("norm_l2h", [](const py::array_t<double>& v, double h) { return norm_l2h(as_vector(v), h); });
    m.def("norm_h1_semi",
          [](const py::array_t<double>& v, double h) { return norm_h1_semi(as_vector(v), h); });
    m.def("norm_a", [](const py::array_t<double>& v, double h) { return norm_a(as_vector(v), h); });
    m.def("solve_tridiagonal",
          [](const py::array_t<double>& sub, const py::array_t<double>& diag,
             const py::array_t<double>& super, const py::array_t<double>& rhs) {
              return as_array(solve_tridiagonal(
                  {as_vector(sub), as_vector(diag), as_vector(super), as_vector(rhs)}));
          },
          py::arg("sub"), py::arg("diag"), py::arg("super"), py::arg("rhs"));

    m.def("problem_labels", &problem_labels);
    m.def("solve", &solve_py, py::arg("problem"), py::arg("alpha"), py::arg("spatial_cells"),
          py::arg("time_steps"), py::arg("final_time") = 1.0, py::arg("scheme") = "transformed",
          py::arg("mesh") = "uniform",
          "Solve a registered problem; returns dict(u=(N+1, M+1) array, x, t, max_error).");
    m.def("run_sweep", &sweep_py, py::arg("alphas"), py::arg("spatial_cells"),
          py::arg("time_steps"), py::arg("final_time") = 1.0, py::arg("scheme") = "transformed",
          py::arg("mesh") = "uniform", py::arg("problem") = "manufactured-sin",
          py::arg("norm") = "max", py::arg("threads") = 0u,
          "Convergence sweep; one dict per (alpha, N) row.");
}
