#include "fracdiff/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracdiff {

namespace {

void require_grid(std::span<const double> v, const char* what) {
    if (v.size() < 3)
        throw std::invalid_argument(std::string(what) + ": grid function needs M >= 2 (length >= 3)");
}

double slope_sum_sq(std::span<const double> v, double h) {
    double sum = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double d = (v[i] - v[i - 1]) / h;
        sum += d * d;
    }
    return sum;
}

} // namespace

GridFunction apply_hh(std::span<const double> v) {
    require_grid(v, "apply_hh");
    GridFunction out(v.begin(), v.end());
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        out[i] = (v[i + 1] + 10.0 * v[i] + v[i - 1]) / 12.0;
    return out;
}

GridFunction apply_delta_x2(std::span<const double> v, double h) {
    require_grid(v, "apply_delta_x2");
    GridFunction out(v.size(), 0.0);
    const double inv_h2 = 1.0 / (h * h);
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        out[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) * inv_h2;
    return out;
}

double norm_l2h(std::span<const double> v, double h) {
    double sum = 0.0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        sum += v[i] * v[i];
    return std::sqrt(h * sum);
}

double norm_h1_semi(std::span<const double> v, double h) {
    return std::sqrt(h * slope_sum_sq(v, h));
}

double inner_a(std::span<const double> v, std::span<const double> w, double h) {
    require_grid(v, "inner_a");
    if (v.size() != w.size())
        throw std::invalid_argument("inner_a: length mismatch");
    double slopes = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i)
        slopes += ((v[i] - v[i - 1]) / h) * ((w[i] - w[i - 1]) / h);
    const double inv_h2 = 1.0 / (h * h);
    double curvature = 0.0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const double dv = (v[i + 1] - 2.0 * v[i] + v[i - 1]) * inv_h2;
        const double dw = (w[i + 1] - 2.0 * w[i] + w[i - 1]) * inv_h2;
        curvature += dv * dw;
    }
    return h * slopes - (h * h / 12.0) * h * curvature;
}

double norm_a(std::span<const double> v, double h) {
    const double sq = inner_a(v, v, h);
    if (sq < -1e-12)
        throw std::logic_error("norm_a: negative radicand " + std::to_string(sq));
    return sq > 0.0 ? std::sqrt(sq) : 0.0;
}

std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys) {
    const std::size_t n = sys.diag.size();
    if (n == 0)
        return {};
    if (sys.rhs.size() != n || sys.sub.size() != n - 1 || sys.super.size() != n - 1)
        throw std::invalid_argument("solve_tridiagonal: inconsistent band lengths");

    for (std::size_t i = 0; i < n; ++i) {
        const double off = (i > 0 ? std::abs(sys.sub[i - 1]) : 0.0) +
                           (i + 1 < n ? std::abs(sys.super[i]) : 0.0);
        if (!(std::abs(sys.diag[i]) > off))
            throw std::invalid_argument("solve_tridiagonal: row " + std::to_string(i) +
                                        " is not strictly diagonally dominant");
    }

    std::vector<double> upper(n > 1 ? n - 1 : 0);
    std::vector<double> w(n);
    double pivot = sys.diag[0];
    if (pivot == 0.0)
        throw std::runtime_error("solve_tridiagonal: zero pivot in row 0");
    w[0] = sys.rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        upper[i - 1] = sys.super[i - 1] / pivot;
        pivot = sys.diag[i] - sys.sub[i - 1] * upper[i - 1];
        if (pivot == 0.0)
            throw std::runtime_error("solve_tridiagonal: zero pivot in row " + std::to_string(i));
        w[i] = (sys.rhs[i] - sys.sub[i - 1] * w[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;)
        w[i] -= upper[i] * w[i + 1];
    return w;
}

} // namespace fracdiff
