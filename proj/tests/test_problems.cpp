#include "fracdiff/harness.hpp"
#include "fracdiff/problems.hpp"
#include "fracdiff/solver.hpp"
#include "fracdiff/specialfn.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace fracdiff;
using std::numbers::pi;

TEST_SUITE("problems") {

TEST_CASE("manufactured problem data") {
    const auto p = manufactured_sin(0.5);
    CHECK(p.label == "manufactured-sin");
    REQUIRE(p.exact_u);
    REQUIRE(p.exact_f_conv);
    for (double x : {0.0, 0.3, 0.5, 1.0})
        CHECK((*p.exact_u)(x, 0.0) == p.phi(x));
    CHECK(p.phi(0.0) == 0.0);
    CHECK(p.phi(1.0) == 0.0);
    CHECK((*p.exact_u)(0.5, 0.5) == doctest::Approx(0.25));
    CHECK_THROWS_AS(manufactured_sin(1.0), std::invalid_argument);
    CHECK_THROWS_AS(manufactured_sin(0.5, 0.0), std::invalid_argument);
}

TEST_CASE("manufactured solution satisfies its Volterra identity") {
    for (double alpha : {0.25, 0.5, 0.75}) {
        const auto p = manufactured_sin(alpha);
        for (auto [x, t] : {std::pair{0.5, 1.0}, std::pair{0.2, 0.6}, std::pair{0.9, 0.05}}) {
            auto rhs = [&](double s) {
                const double u_xx = -pi * pi * std::sin(pi * x) * s * s;
                return u_xx + p.f(x, s);
            };
            const double conv = oracle::riemann_liouville(rhs, alpha, t);
            const double residual = p.phi(x) + conv - (*p.exact_u)(x, t);
            CHECK_MESSAGE(std::abs(residual) <= 1e-8, "alpha=" << alpha << " x=" << x << " t=" << t);
        }
    }
}

TEST_CASE("registry") {
    for (const auto& label : problem_labels())
        CHECK(make_problem(label, 0.5, 0.01).label == label);
    CHECK_THROWS_AS(make_problem("heat", 0.5), std::invalid_argument);
    const auto zero = make_problem("zero", 0.3);
    CHECK(zero.f(0.4, 0.2) == 0.0);
    CHECK((*zero.exact_u)(0.4, 0.2) == 0.0);
}

TEST_CASE("sine-decay carries an exact solution only inside the series envelope") {
    CHECK(sine_decay(0.5, 0.01).exact_u.has_value());
    CHECK_FALSE(sine_decay(0.5, 1.0).exact_u.has_value());
    CHECK(sine_decay(0.5, 1.0).phi(0.5) == doctest::Approx(1.0));
}

TEST_CASE("series reference at t = 0 reproduces phi") {
    const std::vector<double> coeffs{1.0, -0.5, 0.25};
    const auto series = series_reference(coeffs, 0.5, 3);
    for (double x : {0.0, 0.1, 0.37, 0.5, 0.9}) {
        const double phi = std::sin(pi * x) - 0.5 * std::sin(2 * pi * x) + 0.25 * std::sin(3 * pi * x);
        CHECK(series(x, 0.0) == doctest::Approx(phi).epsilon(1e-15));
    }
}

TEST_CASE("series reference with alpha = 1 is the heat-kernel mode") {
    const auto series = series_reference({1.0}, 1.0, 1);
    for (double t : {0.01, 0.05, 0.2}) {
        for (double x : {0.25, 0.5}) {
            const double ref = std::exp(-pi * pi * t) * std::sin(pi * x);
            CHECK(series(x, t) == doctest::Approx(ref).epsilon(1e-13));
        }
    }
}

TEST_CASE("series reference against a 50-digit Mittag-Leffler series") {
    const auto series = series_reference({1.0}, 0.5, 1);
    // E_{1/2}(-pi^2 * 0.1)
    const double frozen = 0.43117256514905252623;
    CHECK(series(0.5, 0.01) == doctest::Approx(frozen).epsilon(1e-13));
    CHECK(oracle::mittag_leffler_hp(0.5, -pi * pi * 0.1) == doctest::Approx(frozen).epsilon(1e-15));
}

TEST_CASE("series reference enforces its envelope") {
    const auto series = series_reference({1.0, 1.0}, 0.5, 2);
    CHECK(series.max_time() == doctest::Approx(std::pow(2.0 / (4 * pi * pi), 2.0)));
    CHECK_THROWS_AS(series(0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(series_reference({1.0}, 0.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(series_reference({1.0}, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(series_reference({std::nan("")}, 0.5, 1), std::invalid_argument);
}

TEST_CASE("transformed scheme agrees with the series solution") {
    const auto problem = sine_decay(0.5, 0.01);
    REQUIRE(problem.exact_u);
    const SpatialGrid grid(64);
    const auto mesh = uniform_time_mesh(0.01, 256);
    const auto lattice = solve(problem, grid, mesh, SchemeKind::Transformed);
    double worst = 0.0;
    for (int i = 0; i <= grid.cells(); ++i) {
        const double x = grid.node(i);
        worst = std::max(worst, std::abs(lattice.final_level()[static_cast<std::size_t>(i)] -
                                         (*problem.exact_u)(x, 0.01)));
    }
    CHECK(worst <= 5e-4);
}

}
