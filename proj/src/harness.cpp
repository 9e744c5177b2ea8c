#include "fracdiff/harness.hpp"

#include "fracdiff/problems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <sstream>
#include <thread>

namespace fracdiff {

namespace {

std::string sci(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5e", value);
    return buf;
}

std::string plain(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

int parse_int(const std::string& token, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw UsageError(std::string("invalid ") + what + " '" + token + "'");
    }
    if (used != token.size())
        throw UsageError(std::string("invalid ") + what + " '" + token + "'");
    return value;
}

double parse_double(const std::string& token, const char* what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        throw UsageError(std::string("invalid ") + what + " '" + token + "'");
    }
    if (used != token.size())
        throw UsageError(std::string("invalid ") + what + " '" + token + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        parts.push_back(item);
    if (!text.empty() && text.back() == sep)
        parts.emplace_back();
    return parts;
}

void validate(const SweepConfig& cfg) {
    if (cfg.alphas.empty())
        throw UsageError("at least one alpha is required");
    for (double a : cfg.alphas)
        if (!(a > 0.0 && a < 1.0))
            throw UsageError("alpha must lie in (0, 1), got " + plain(a));
    if (cfg.spatial_cells < 2)
        throw UsageError("spatial cells must be at least 2");
    if (!(cfg.final_time > 0.0))
        throw UsageError("final time must be positive");
    if (cfg.time_steps.empty())
        throw UsageError("at least one time-step count is required");
    for (std::size_t j = 0; j < cfg.time_steps.size(); ++j) {
        if (cfg.time_steps[j] < 1)
            throw UsageError("time-step counts must be positive");
        if (j > 0 && cfg.time_steps[j] <= cfg.time_steps[j - 1])
            throw UsageError("time-step counts must be strictly increasing");
        if (j > 0 && cfg.require_rates && cfg.time_steps[j] != 2 * cfg.time_steps[j - 1])
            throw UsageError("rates need a doubling ladder of time-step counts");
    }
    if (cfg.scheme == SchemeKind::L1Baseline && cfg.mesh.kind != MeshKind::Uniform)
        throw UsageError("the L1 baseline supports uniform meshes only");
    const auto labels = problem_labels();
    if (std::find(labels.begin(), labels.end(), cfg.problem_label) == labels.end())
        throw UsageError("unknown problem label '" + cfg.problem_label + "'");
}

ConvergenceRow run_cell(const SweepConfig& cfg, double alpha, int steps) {
    const auto start = std::chrono::steady_clock::now();
    const ProblemSpec problem = make_problem(cfg.problem_label, alpha, cfg.final_time);
    if (!problem.exact_u)
        throw UsageError("problem '" + cfg.problem_label +
                         "' has no exact solution on this time interval");
    const SpatialGrid grid(cfg.spatial_cells);
    const TemporalMesh mesh = cfg.mesh.build(cfg.final_time, steps);
    const SolutionLattice lattice = solve(problem, grid, mesh, cfg.scheme);
    ConvergenceRow row;
    row.alpha = alpha;
    row.scheme = cfg.scheme;
    row.mesh = cfg.mesh.label();
    row.spatial_cells = cfg.spatial_cells;
    row.time_steps = steps;
    row.error = lattice_error(lattice, *problem.exact_u, cfg.norm);
    row.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

} // namespace

TemporalMesh MeshSpec::build(double final_time, int steps) const {
    switch (kind) {
    case MeshKind::Uniform: return TemporalMesh::uniform(final_time, steps);
    case MeshKind::Graded: return TemporalMesh::graded(final_time, steps, grading);
    case MeshKind::Custom: break;
    }
    throw UsageError("custom meshes cannot be generated from a step count");
}

std::string MeshSpec::label() const {
    if (kind == MeshKind::Graded)
        return "graded:" + plain(grading);
    return "uniform";
}

MeshSpec parse_mesh(const std::string& text) {
    if (text == "uniform")
        return {};
    const std::string prefix = "graded:";
    if (text.rfind(prefix, 0) == 0) {
        const double r = parse_double(text.substr(prefix.size()), "grading exponent");
        if (!(r >= 1.0))
            throw UsageError("grading exponent must be >= 1");
        if (r == 1.0)
            return {};
        return {MeshKind::Graded, r};
    }
    throw UsageError("unknown mesh '" + text + "' (expected uniform or graded:<r>)");
}

ErrorNorm parse_norm(const std::string& text) {
    if (text == "max")
        return ErrorNorm::Max;
    if (text == "a")
        return ErrorNorm::A;
    if (text == "l2")
        return ErrorNorm::L2;
    throw UsageError("unknown norm '" + text + "' (expected max, a or l2)");
}

OutputFormat parse_format(const std::string& text) {
    if (text == "csv")
        return OutputFormat::Csv;
    if (text == "table")
        return OutputFormat::Table;
    throw UsageError("unknown format '" + text + "' (expected csv or table)");
}

std::vector<int> parse_time_steps(const std::string& text) {
    std::vector<int> steps;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3 || parts[2] != "x2")
            throw UsageError("time-step ladder must look like a:b:x2, got '" + text + "'");
        const int first = parse_int(parts[0], "time-step count");
        const int last = parse_int(parts[1], "time-step count");
        if (first < 1 || last < first)
            throw UsageError("time-step ladder needs 1 <= a <= b");
        for (long long n = first; n <= last; n *= 2)
            steps.push_back(static_cast<int>(n));
        if (steps.back() != last)
            throw UsageError("ladder end " + std::to_string(last) + " is not reached by doubling " +
                             std::to_string(first));
        return steps;
    }
    for (const auto& token : split(text, ','))
        steps.push_back(parse_int(token, "time-step count"));
    if (steps.empty())
        throw UsageError("empty time-step list");
    return steps;
}

std::vector<double> parse_alphas(const std::string& text) {
    std::vector<double> alphas;
    for (const auto& token : split(text, ','))
        alphas.push_back(parse_double(token, "alpha"));
    if (alphas.empty())
        throw UsageError("empty alpha list");
    return alphas;
}

double max_lattice_error(const SolutionLattice& lattice, const SpaceTimeFn& exact_u) {
    return lattice_error(lattice, exact_u, ErrorNorm::Max);
}

double lattice_error(const SolutionLattice& lattice, const SpaceTimeFn& exact_u, ErrorNorm norm) {
    const double h = lattice.grid.h();
    double worst = 0.0;
    GridFunction diff(lattice.grid.nodes().size());
    for (int n = 0; n < lattice.computed_levels(); ++n) {
        const double t = lattice.mesh.point(n);
        const auto& u = lattice.levels[static_cast<std::size_t>(n)];
        for (int i = 0; i <= lattice.grid.cells(); ++i) {
            const auto iu = static_cast<std::size_t>(i);
            diff[iu] = u[iu] - exact_u(lattice.grid.node(i), t);
        }
        double level_error = 0.0;
        switch (norm) {
        case ErrorNorm::Max:
            for (double d : diff)
                level_error = std::max(level_error, std::abs(d));
            break;
        case ErrorNorm::A: level_error = norm_a(diff, h); break;
        case ErrorNorm::L2: level_error = norm_l2h(diff, h); break;
        }
        worst = std::max(worst, level_error);
    }
    return worst;
}

double convergence_rate(double coarse_error, double fine_error) {
    return std::log2(coarse_error / fine_error);
}

ConvergenceReport run_sweep(const SweepConfig& cfg) {
    validate(cfg);

    struct Cell {
        double alpha;
        int steps;
    };
    std::vector<Cell> cells;
    for (double alpha : cfg.alphas)
        for (int steps : cfg.time_steps)
            cells.push_back({alpha, steps});

    std::vector<ConvergenceRow> rows(cells.size());
    std::vector<std::exception_ptr> failures(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < cells.size(); j = next++) {
            try {
                rows[j] = run_cell(cfg, cells[j].alpha, cells[j].steps);
            } catch (...) {
                failures[j] = std::current_exception();
            }
        }
    };

    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    for (const auto& failure : failures)
        if (failure)
            std::rethrow_exception(failure);

    for (std::size_t j = 1; j < rows.size(); ++j) {
        const auto& prev = rows[j - 1];
        auto& row = rows[j];
        if (prev.alpha == row.alpha && prev.spatial_cells == row.spatial_cells &&
            2 * prev.time_steps == row.time_steps)
            row.rate = convergence_rate(prev.error, row.error);
    }
    return {std::move(rows)};
}

void write_csv(const ConvergenceReport& report, std::ostream& out) {
    out << "alpha,scheme,mesh,M,N,E1,rate,wall_seconds\n";
    for (const auto& row : report.rows) {
        out << plain(row.alpha) << ',' << to_string(row.scheme) << ',' << row.mesh << ','
            << row.spatial_cells << ',' << row.time_steps << ',' << sci(row.error) << ','
            << (row.rate ? sci(*row.rate) : std::string()) << ',' << sci(row.wall_seconds) << '\n';
    }
}

void write_table(const ConvergenceReport& report, std::ostream& out) {
    char line[128];
    for (std::size_t j = 0; j < report.rows.size(); ++j) {
        const auto& row = report.rows[j];
        const bool new_block = j == 0 || report.rows[j - 1].alpha != row.alpha;
        if (new_block) {
            if (j > 0)
                out << '\n';
            out << "alpha = " << plain(row.alpha) << "  (scheme " << to_string(row.scheme)
                << ", mesh " << row.mesh << ", M = " << row.spatial_cells << ")\n";
            std::snprintf(line, sizeof line, "%8s  %12s  %8s  %10s\n", "N", "E1(M,N)", "rate",
                          "seconds");
            out << line;
        }
        char rate[32];
        if (row.rate)
            std::snprintf(rate, sizeof rate, "%.4f", *row.rate);
        else
            std::snprintf(rate, sizeof rate, "*");
        std::snprintf(line, sizeof line, "%8d  %12.4e  %8s  %10.3e\n", row.time_steps, row.error,
                      rate, row.wall_seconds);
        out << line;
    }
}

} // namespace fracdiff
