#include "fracdiff/problems.hpp"

#include "fracdiff/specialfn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracdiff {

namespace {

using std::numbers::pi;

void check_order(double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument(std::string(who) + ": alpha must lie in (0, 1)");
}

void check_time(double final_time, const char* who) {
    if (!(final_time > 0.0))
        throw std::invalid_argument(std::string(who) + ": final time must be positive");
}

} // namespace

ProblemSpec manufactured_sin(double alpha, double final_time) {
    check_order(alpha, "manufactured_sin");
    check_time(final_time, "manufactured_sin");
    const double forcing_scale = 2.0 / gamma(3.0 - alpha);
    const double conv_scale = 2.0 * pi * pi / gamma(3.0 + alpha);

    ProblemSpec p;
    p.alpha = alpha;
    p.final_time = final_time;
    p.label = "manufactured-sin";
    p.phi = [](double) { return 0.0; };
    p.f = [alpha, forcing_scale](double x, double t) {
        return std::sin(pi * x) * ((pi * t) * (pi * t) + forcing_scale * std::pow(t, 2.0 - alpha));
    };
    p.exact_u = [](double x, double t) { return std::sin(pi * x) * t * t; };
    p.exact_f_conv = [alpha, conv_scale](double x, double t) {
        return std::sin(pi * x) * (conv_scale * std::pow(t, 2.0 + alpha) + t * t);
    };
    return p;
}

ProblemSpec zero_problem(double alpha, double final_time) {
    check_order(alpha, "zero_problem");
    check_time(final_time, "zero_problem");
    ProblemSpec p;
    p.alpha = alpha;
    p.final_time = final_time;
    p.label = "zero";
    p.phi = [](double) { return 0.0; };
    p.f = [](double, double) { return 0.0; };
    p.exact_u = [](double, double) { return 0.0; };
    p.exact_f_conv = [](double, double) { return 0.0; };
    return p;
}

ProblemSpec sine_decay(double alpha, double final_time) {
    check_order(alpha, "sine_decay");
    check_time(final_time, "sine_decay");
    ProblemSpec p;
    p.alpha = alpha;
    p.final_time = final_time;
    p.label = "sine-decay";
    p.phi = [](double x) { return std::sin(pi * x); };
    p.f = [](double, double) { return 0.0; };
    p.exact_f_conv = [](double, double) { return 0.0; };
    SeriesSolution series({1.0}, alpha, 1);
    if (final_time <= series.max_time())
        p.exact_u = [series](double x, double t) { return series(x, t); };
    return p;
}

ProblemSpec make_problem(const std::string& label, double alpha, double final_time) {
    if (label == "manufactured-sin")
        return manufactured_sin(alpha, final_time);
    if (label == "zero")
        return zero_problem(alpha, final_time);
    if (label == "sine-decay")
        return sine_decay(alpha, final_time);
    throw std::invalid_argument("unknown problem label '" + label + "'");
}

std::vector<std::string> problem_labels() { return {"manufactured-sin", "zero", "sine-decay"}; }

SeriesSolution::SeriesSolution(std::vector<double> sine_coeffs, double alpha, int n_modes)
    : coeffs_(std::move(sine_coeffs)), alpha_(alpha), n_modes_(n_modes) {
    // alpha = 1 is the classical heat equation and is accepted for checking.
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("SeriesSolution: alpha must lie in (0, 1]");
    if (n_modes < 1 || static_cast<std::size_t>(n_modes) > coeffs_.size())
        throw std::invalid_argument("SeriesSolution: n_modes must be in [1, number of coefficients]");
    for (int n = 0; n < n_modes; ++n)
        if (!std::isfinite(coeffs_[static_cast<std::size_t>(n)]))
            throw std::invalid_argument("SeriesSolution: non-finite coefficient");
}

double SeriesSolution::max_time() const {
    const double lambda_max = std::pow(n_modes_ * pi, 2);
    return std::pow(kSeriesArgumentLimit / lambda_max, 1.0 / alpha_);
}

double SeriesSolution::operator()(double x, double t) const {
    if (t < 0.0)
        throw std::domain_error("SeriesSolution: negative time");
    const double t_alpha = std::pow(t, alpha_);
    double sum = 0.0;
    for (int n = 1; n <= n_modes_; ++n) {
        const double lambda = std::pow(n * pi, 2);
        const double z = -lambda * t_alpha;
        if (-z > kSeriesArgumentLimit)
            throw std::domain_error("SeriesSolution: lambda_n t^alpha = " + std::to_string(-z) +
                                    " is outside the series envelope");
        sum += coeffs_[static_cast<std::size_t>(n - 1)] * mittag_leffler(alpha_, z) *
               std::sin(n * pi * x);
    }
    return sum;
}

} // namespace fracdiff
