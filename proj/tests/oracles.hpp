#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's numerical paths.

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Hp = boost::multiprecision::cpp_bin_float_50;

/// E_beta(z) from a fixed number of Taylor terms in 50-digit arithmetic.
inline double mittag_leffler_hp(double beta, double z, int terms = 200) {
    Hp sum = 0;
    Hp power = 1;
    const Hp zz = z;
    const Hp bb = beta;
    for (int n = 0; n < terms; ++n) {
        sum += power / boost::multiprecision::tgamma(1 + n * bb);
        power *= zz;
    }
    return static_cast<double>(sum);
}

using Dense = std::vector<std::vector<double>>;

/// Gaussian elimination with partial pivoting.
inline std::vector<double> dense_solve(Dense a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col]))
                piv = r;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        if (a[col][col] == 0.0)
            throw std::runtime_error("dense_solve: singular");
        for (std::size_t r = col + 1; r < n; ++r) {
            const double m = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= m * a[col][c];
            b[r] -= m * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c)
            s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

inline std::vector<double> dense_matvec(const Dense& a, const std::vector<double>& v) {
    std::vector<double> out(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] += a[i][j] * v[j];
    return out;
}

/// (M+1) x (M+1) matrix of the compact operator with identity end rows.
inline Dense hh_matrix(std::size_t size) {
    Dense a(size, std::vector<double>(size, 0.0));
    a.front().front() = 1.0;
    a.back().back() = 1.0;
    for (std::size_t i = 1; i + 1 < size; ++i) {
        a[i][i - 1] = 1.0 / 12.0;
        a[i][i] = 10.0 / 12.0;
        a[i][i + 1] = 1.0 / 12.0;
    }
    return a;
}

/// Second-difference matrix with zero end rows.
inline Dense dxx_matrix(std::size_t size, double h) {
    Dense a(size, std::vector<double>(size, 0.0));
    for (std::size_t i = 1; i + 1 < size; ++i) {
        a[i][i - 1] = 1.0 / (h * h);
        a[i][i] = -2.0 / (h * h);
        a[i][i + 1] = 1.0 / (h * h);
    }
    return a;
}

/// Kahan-Babuska (Neumaier) summation.
inline double compensated_sum(const std::vector<double>& xs) {
    double sum = 0.0;
    double carry = 0.0;
    for (double x : xs) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    return sum + carry;
}

/// (1/Gamma(alpha)) int_0^t (t-s)^{alpha-1} s^beta ds
///   = Gamma(beta+1) / Gamma(alpha+beta+1) t^{alpha+beta}.
inline double monomial_convolution(double alpha, double beta, double t) {
    return boost::math::tgamma(beta + 1.0) / boost::math::tgamma(alpha + beta + 1.0) *
           std::pow(t, alpha + beta);
}

/// (1/Gamma(alpha)) int_0^t (t-s)^{alpha-1} g(s) ds through s = t - w^{1/alpha},
/// which turns the kernel into the constant 1/alpha.
template <class F>
double riemann_liouville(F g, double alpha, double t) {
    const double upper = std::pow(t, alpha);
    auto integrand = [&](double w) { return g(t - std::pow(w, 1.0 / alpha)); };
    double error = 0.0;
    const double integral =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, upper, 15,
                                                                      1e-14, &error);
    return integral / (alpha * boost::math::tgamma(alpha));
}

/// Random Dirichlet grid function of length cells+1.
inline std::vector<double> random_dirichlet(std::mt19937_64& rng, int cells, double scale = 1.0) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    std::vector<double> v(static_cast<std::size_t>(cells) + 1, 0.0);
    for (int i = 1; i < cells; ++i)
        v[static_cast<std::size_t>(i)] = dist(rng);
    return v;
}

} // namespace oracle
