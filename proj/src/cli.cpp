#include "fracdiff/harness.hpp"

#include "fracdiff/problems.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

namespace fracdiff {

namespace {

struct CommonOptions {
    std::string alpha;
    int spatial_cells = 100;
    std::string time_steps;
    double final_time = 1.0;
    std::string scheme = "transformed";
    std::string mesh = "uniform";
    std::string problem = "manufactured-sin";
    std::string format = "csv";
    std::string output;
};

void add_common(CLI::App& cmd, CommonOptions& o) {
    cmd.add_option("--alpha", o.alpha, "fractional order(s) in (0,1), comma separated")->required();
    cmd.add_option("--spatial-cells", o.spatial_cells, "number of spatial cells M")
        ->capture_default_str();
    cmd.add_option("--time-steps", o.time_steps, "N, a comma list, or a doubling ladder a:b:x2")
        ->required();
    cmd.add_option("--final-time", o.final_time, "final time T")->capture_default_str();
    cmd.add_option("--scheme", o.scheme, "transformed | l1")->capture_default_str();
    cmd.add_option("--mesh", o.mesh, "uniform | graded:<r>")->capture_default_str();
    cmd.add_option("--problem", o.problem, "manufactured-sin | zero | sine-decay")
        ->capture_default_str();
    cmd.add_option("--format", o.format, "csv | table")->capture_default_str();
    cmd.add_option("--output", o.output, "output file (default: standard output)");
}

/// Opens the requested output, falling back to stdout.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_)
                throw std::runtime_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::string fmt_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

int run_single(const CommonOptions& o, bool full_lattice) {
    const auto alphas = parse_alphas(o.alpha);
    if (alphas.size() != 1)
        throw UsageError("run takes exactly one alpha");
    const auto steps = parse_time_steps(o.time_steps);
    if (steps.size() != 1)
        throw UsageError("run takes exactly one time-step count");
    SchemeKind scheme{};
    try {
        scheme = parse_scheme(o.scheme);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const MeshSpec mesh_spec = parse_mesh(o.mesh);
    const OutputFormat format = parse_format(o.format);
    if (scheme == SchemeKind::L1Baseline && mesh_spec.kind != MeshKind::Uniform)
        throw UsageError("the L1 baseline supports uniform meshes only");
    if (!(alphas[0] > 0.0 && alphas[0] < 1.0))
        throw UsageError("alpha must lie in (0, 1)");
    if (o.spatial_cells < 2)
        throw UsageError("spatial cells must be at least 2");
    if (!(o.final_time > 0.0))
        throw UsageError("final time must be positive");
    if (steps[0] < 1)
        throw UsageError("time-step count must be positive");

    ProblemSpec problem;
    try {
        problem = make_problem(o.problem, alphas[0], o.final_time);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const SpatialGrid grid(o.spatial_cells);
    const TemporalMesh mesh = mesh_spec.build(o.final_time, steps[0]);
    const SolutionLattice lattice = solve(problem, grid, mesh, scheme);

    Sink sink(o.output);
    std::ostream& out = sink.stream();
    const bool exact = problem.exact_u.has_value();
    const char sep = format == OutputFormat::Csv ? ',' : ' ';
    const int first = full_lattice ? 0 : mesh.steps();
    if (full_lattice)
        out << 't' << sep;
    out << 'x' << sep << 'u';
    if (exact)
        out << sep << "exact" << sep << "error";
    out << '\n';
    for (int n = first; n <= mesh.steps(); ++n) {
        const double t = mesh.point(n);
        const auto& u = lattice.levels[static_cast<std::size_t>(n)];
        for (int i = 0; i <= grid.cells(); ++i) {
            const double x = grid.node(i);
            const double value = u[static_cast<std::size_t>(i)];
            if (full_lattice)
                out << fmt_value(t) << sep;
            out << fmt_value(x) << sep << fmt_value(value);
            if (exact) {
                const double ref = (*problem.exact_u)(x, t);
                out << sep << fmt_value(ref) << sep << fmt_value(value - ref);
            }
            out << '\n';
        }
    }
    return 0;
}

int run_converge(const CommonOptions& o, const std::string& norm, bool no_rates, unsigned threads) {
    SweepConfig cfg;
    cfg.alphas = parse_alphas(o.alpha);
    cfg.spatial_cells = o.spatial_cells;
    cfg.time_steps = parse_time_steps(o.time_steps);
    cfg.final_time = o.final_time;
    try {
        cfg.scheme = parse_scheme(o.scheme);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    cfg.mesh = parse_mesh(o.mesh);
    cfg.problem_label = o.problem;
    cfg.norm = parse_norm(norm);
    cfg.require_rates = !no_rates;
    cfg.threads = threads;
    cfg.format = parse_format(o.format);
    if (!o.output.empty())
        cfg.output_path = o.output;

    const ConvergenceReport report = run_sweep(cfg);
    Sink sink(o.output);
    if (cfg.format == OutputFormat::Csv)
        write_csv(report, sink.stream());
    else
        write_table(report, sink.stream());
    return 0;
}

} // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"Time-fractional diffusion solver (Volterra form, compact fourth-order space)"};
    app.require_subcommand(1);

    CommonOptions run_opts;
    bool full_lattice = false;
    auto* run = app.add_subcommand("run", "solve once and print the final profile or full lattice");
    add_common(*run, run_opts);
    run->add_flag("--lattice", full_lattice, "print every time level, not only t = T");

    CommonOptions conv_opts;
    std::string norm = "max";
    bool no_rates = false;
    unsigned threads = 0;
    auto* converge = app.add_subcommand("converge", "error/rate sweep over alpha and N");
    add_common(*converge, conv_opts);
    converge->add_option("--norm", norm, "max | a | l2")->capture_default_str();
    converge->add_flag("--no-rates", no_rates, "allow ladders that are not x2 steps");
    converge->add_option("--threads", threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e, std::cerr, std::cerr);
        return 2;
    }

    try {
        if (*run)
            return run_single(run_opts, full_lattice);
        return run_converge(conv_opts, norm, no_rates, threads);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << (*run ? run : converge)->help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace fracdiff
