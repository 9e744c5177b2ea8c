#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fracdiff {

using SpaceFn = std::function<double(double)>;
using SpaceTimeFn = std::function<double(double, double)>;

/// D_t^alpha u = u_xx + f on (0,1) x (0,T], u(x,0) = phi(x), u(0,t) = u(1,t) = 0.
///
/// exact_f_conv, when given, is the closed form of (a_{1-alpha} * f)(x, t).
struct ProblemSpec {
    double alpha = 0.5;
    double final_time = 1.0;
    SpaceFn phi;
    SpaceTimeFn f;
    std::optional<SpaceTimeFn> exact_u;
    std::optional<SpaceTimeFn> exact_f_conv;
    std::string label;
};

/// u = sin(pi x) t^2 with the matching forcing.
ProblemSpec manufactured_sin(double alpha, double final_time = 1.0);

/// phi = 0, f = 0.
ProblemSpec zero_problem(double alpha, double final_time = 1.0);

/// phi = sin(pi x), f = 0. The exact solution E_alpha(-pi^2 t^alpha) sin(pi x)
/// is attached only when the whole interval lies inside the series envelope.
ProblemSpec sine_decay(double alpha, double final_time = 1.0);

/// Registry lookup: "manufactured-sin", "zero", "sine-decay".
/// Throws std::invalid_argument for anything else.
ProblemSpec make_problem(const std::string& label, double alpha, double final_time = 1.0);

std::vector<std::string> problem_labels();

/// Largest |lambda_n t^alpha| the sine-series reference accepts. Past this the
/// alternating Mittag-Leffler series cancels away too many digits.
inline constexpr double kSeriesArgumentLimit = 2.0;

/// Homogeneous sine-series solution sum_n a_n E_alpha(-(n pi)^2 t^alpha) sin(n pi x).
class SeriesSolution {
public:
    SeriesSolution(std::vector<double> sine_coeffs, double alpha, int n_modes);

    /// Throws std::domain_error outside the envelope, ConvergenceError if the
    /// series itself fails.
    double operator()(double x, double t) const;

    const std::vector<double>& coeffs() const { return coeffs_; }
    int n_modes() const { return n_modes_; }
    double alpha() const { return alpha_; }
    /// Largest t for which every retained mode stays inside the envelope.
    double max_time() const;

private:
    std::vector<double> coeffs_;
    double alpha_;
    int n_modes_;
};

inline SeriesSolution series_reference(std::vector<double> sine_coeffs, double alpha, int n_modes) {
    return SeriesSolution(std::move(sine_coeffs), alpha, n_modes);
}

} // namespace fracdiff
