#pragma once

#include "fracdiff/solver.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracdiff {

/// Bad user input: unknown labels, malformed ladders, unsupported combos.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ErrorNorm { Max, A, L2 };
enum class OutputFormat { Csv, Table };

struct MeshSpec {
    MeshKind kind = MeshKind::Uniform;
    double grading = 1.0;

    TemporalMesh build(double final_time, int steps) const;
    std::string label() const;
};

MeshSpec parse_mesh(const std::string& text);
ErrorNorm parse_norm(const std::string& text);
OutputFormat parse_format(const std::string& text);

/// "a:b:x2" (doubling ladder, inclusive) or "n1,n2,...".
std::vector<int> parse_time_steps(const std::string& text);
std::vector<double> parse_alphas(const std::string& text);

struct SweepConfig {
    std::vector<double> alphas;
    int spatial_cells = 100;
    std::vector<int> time_steps;
    double final_time = 1.0;
    SchemeKind scheme = SchemeKind::Transformed;
    MeshSpec mesh;
    std::string problem_label = "manufactured-sin";
    ErrorNorm norm = ErrorNorm::Max;
    /// Reject ladders whose consecutive entries are not N, 2N.
    bool require_rates = true;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    std::optional<std::string> output_path;
    OutputFormat format = OutputFormat::Csv;
};

struct ConvergenceRow {
    double alpha = 0.0;
    SchemeKind scheme = SchemeKind::Transformed;
    std::string mesh;
    int spatial_cells = 0;
    int time_steps = 0;
    double error = 0.0;
    std::optional<double> rate;
    double wall_seconds = 0.0;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
};

/// E_1: max over every lattice point of |u_i^n - u(x_i, t_n)|.
double max_lattice_error(const SolutionLattice& lattice, const SpaceTimeFn& exact_u);

/// Max over levels of the chosen discrete norm of the error vector.
double lattice_error(const SolutionLattice& lattice, const SpaceTimeFn& exact_u, ErrorNorm norm);

/// log2(E(N/2) / E(N)).
double convergence_rate(double coarse_error, double fine_error);

/// One row per (alpha, N) in config order. Cells run concurrently; the
/// report does not depend on scheduling.
ConvergenceReport run_sweep(const SweepConfig& cfg);

void write_csv(const ConvergenceReport& report, std::ostream& out);
void write_table(const ConvergenceReport& report, std::ostream& out);

/// Entry point of the command-line tool. Exit codes: 0 success, 1 runtime
/// failure, 2 usage error.
int cli_main(int argc, char** argv);

} // namespace fracdiff
