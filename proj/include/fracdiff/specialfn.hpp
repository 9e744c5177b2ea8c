#pragma once

#include <stdexcept>

namespace fracdiff {

/// Raised when a truncated series fails to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Real Gamma function for x > 0. Throws std::domain_error otherwise.
double gamma(double x);

struct MLParams {
    double beta = 1.0;
    double z = 0.0;
    double tol = 1e-14;
    int max_terms = 500;
};

/// One-parameter Mittag-Leffler function E_beta(z) = sum_n z^n / Gamma(1 + n*beta),
/// summed directly from its Taylor series.
///
/// Summation stops once the next term is at most tol * |partial sum|. The
/// series alternates for z < 0 and loses precision quickly as |z| grows, so
/// arguments are restricted to |z| <= 50; callers that need accurate values
/// should stay well inside that (see max_term_magnitude in MLResult).
struct MLResult {
    double value = 0.0;
    int terms = 0;
    double max_term_magnitude = 0.0;
};

MLResult mittag_leffler_series(const MLParams& p);

inline double mittag_leffler(const MLParams& p) { return mittag_leffler_series(p).value; }

inline double mittag_leffler(double beta, double z) { return mittag_leffler({beta, z}); }

} // namespace fracdiff
