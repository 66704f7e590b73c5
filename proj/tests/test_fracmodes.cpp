#include <cmath>
#include <stdexcept>
#include <vector>

#include "besselkit/approx.hpp"
#include "besselkit/fracmodes.hpp"
#include "besselkit/mittag_leffler.hpp"
#include "doctest.h"

using namespace besselkit;

namespace {

// Classical ball, d = 3, R = 1: 2 sum (-1)^{j+1} sin(j pi r)/(j pi r) exp(-j^2 pi^2 t).
double ball_oracle(double r, double t) {
    double s = 0.0;
    for (int j = 1; j <= 200; ++j) {
        const double w = j * M_PI;
        const double shape = r == 0.0 ? 1.0 : std::sin(w * r) / (w * r);
        s += 2.0 * ((j % 2 == 1) ? 1.0 : -1.0) * shape * std::exp(-w * w * t);
    }
    return s;
}

// Classical slab |r| < R, d = 1: 4 sum (-1)^j cos(k r)/((2j+1) pi) exp(-k^2 K t), k = (2j+1) pi/(2R).
double slab_oracle(double r, double t, double K, double R) {
    double s = 0.0;
    for (int j = 0; j < 200; ++j) {
        const double k = (2 * j + 1) * M_PI / (2.0 * R);
        s += 4.0 * ((j % 2 == 0) ? 1.0 : -1.0) / ((2 * j + 1) * M_PI) * std::cos(k * r) * std::exp(-k * k * K * t);
    }
    return s;
}

}  // namespace

TEST_CASE("problem validation") {
    CHECK(FracProblem{}.eta() == 0.5);
    CHECK(FracProblem{0.5, 2.0, 3.0, 2, 1.0}.rho(9.0) == doctest::Approx(1.5));
    CHECK_THROWS_AS(FracSolver(FracProblem{0.0, 1, 1, 3, 1}), std::domain_error);
    CHECK_THROWS_AS(FracSolver(FracProblem{2.5, 1, 1, 3, 1}), std::domain_error);
    CHECK_THROWS_AS(FracSolver(FracProblem{0.5, 0, 1, 3, 1}), std::domain_error);
    CHECK_THROWS_AS(FracSolver(FracProblem{0.5, 1, -1, 3, 1}), std::domain_error);
    CHECK_THROWS_AS(FracSolver(FracProblem{0.5, 1, 1, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(FracSolver(FracProblem{0.5, 1, 1, 3, std::nan("")}), std::domain_error);

    const FracSolver s(FracProblem{0.5, 1, 1, 3, 1});
    CHECK_THROWS_AS((void)s.series(1.5, 1.0, 10), std::domain_error);
    CHECK_THROWS_AS((void)s.series(0.5, 0.0, 10), std::domain_error);
    CHECK_THROWS_AS((void)s.series(0.5, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)s.asymptotic(0.5, 0.5), std::domain_error);  // rho = sqrt 2
    CHECK_THROWS_AS((void)s.asymptotic(-0.1, 100.0), std::domain_error);
    CHECK_THROWS_AS((void)s.expansion(1.0), std::domain_error);
    CHECK_THROWS_AS((void)FracSolver(FracProblem{1.0, 1, 1, 3, 1}).asymptotic(0.5, 100.0), std::domain_error);
    CHECK_THROWS_AS((void)FracSolver(FracProblem{2.0, 1, 1, 3, 1}).asymptotic(0.5, 100.0), std::domain_error);
}

TEST_CASE("classical limits") {
    const FracSolver ball(FracProblem{1.0, 1.0, 1.0, 3, 1.0});
    const FracSolver slab(FracProblem{1.0, 0.5, 2.0, 1, 1.0});
    for (double t : {0.01, 0.05, 0.3}) {
        for (double x : {0.0, 0.2, 0.5, 0.9}) {
            CHECK(std::abs(ball.series(x, t, 120).value - ball_oracle(x, t)) <= 1e-10);
            CHECK(std::abs(slab.series(2.0 * x, t, 120).value - slab_oracle(2.0 * x, t, 0.5, 2.0)) <= 1e-10);
        }
    }
}

TEST_CASE("wave limit in the slab") {
    // gamma = 2, d = 1: the series is the Fourier series of the rectangular
    // pulse translated by d'Alembert, so at the centre c stays 1 until the
    // boundary signal arrives at t = R / sqrt K.
    const FracSolver wave(FracProblem{2.0, 1.0, 1.0, 1, 1.0});
    CHECK(wave.series(0.0, 0.5, 4000).value == doctest::Approx(1.0).epsilon(2e-3));
    CHECK(wave.series(0.0, 1.5, 4000).value == doctest::Approx(-1.0).epsilon(2e-3));
}

TEST_CASE("initial condition is recovered at early times") {
    const FracSolver sub(FracProblem{0.5, 1.0, 1.0, 3, 1.0});
    for (int modes : {200, 500}) CHECK(std::abs(sub.series(0.5, 1e-6, modes).value - 1.0) <= 1e-3);
    const FracSolver super(FracProblem{1.5, 1.0, 1.0, 3, 1.0});
    CHECK(std::abs(super.series(0.5, 1e-4, 500).value - 1.0) <= 1e-3);
}

TEST_CASE("boundary value is exactly zero") {
    for (double g : {0.3, 0.5, 1.0, 1.5, 2.0}) {
        for (int d : {1, 2, 3}) {
            const FracSolver s(FracProblem{g, 1.0, 2.0, d, 1.0});
            CHECK(s.series(2.0, 0.7, 40).value == 0.0);
            if (g != 1.0 && g != 2.0) CHECK(s.asymptotic(2.0, 400.0).value == 0.0);
        }
    }
}

TEST_CASE("tail estimate does not vanish on nodes") {
    // x = 1/2 is a node of every even mode for d = 3.
    const FracSolver s(FracProblem{0.5, 1.0, 1.0, 3, 1.0});
    const SeriesSolution sol = s.series(0.5, 1e-6, 200, 1e-8);
    CHECK(sol.tail_estimate > 1e-8);
    CHECK(sol.tail_warning);
    CHECK_FALSE(FracSolver(FracProblem{1.0, 1.0, 1.0, 3, 1.0}).series(0.5, 0.1, 20).tail_warning);
}

TEST_CASE("leading long-time term") {
    // I_1 = a_0 (1 - x^2) with a_0 = z^2 / (2 d), so the m = 1 term is
    // rho (1 - x^2) / (2 d Gamma(1 - gamma)), the steady profile of -Laplacian u = 1.
    for (double g : {0.25, 0.5, 0.75, 1.5}) {
        for (int d : {1, 2, 3, 5}) {
            const FracSolver s(FracProblem{g, 1.0, 1.0, d, 1.0});
            const double t = std::pow(50.0, 1.0 / g);
            const double rho = s.problem().rho(t);
            for (double x : {0.0, 0.3, 0.8}) {
                const double expected = rho * (1.0 - x * x) / (2.0 * d * std::tgamma(1.0 - g));
                CHECK(s.asymptotic(x, t, 1).value == doctest::Approx(expected).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("expansion structure") {
    const FracSolver s(FracProblem{0.5, 1.0, 1.0, 3, 1.0});
    const ModeExpansion ex = s.expansion(0.1);
    REQUIRE_FALSE(ex.terms.empty());
    for (const ModeTerm& term : ex.terms) {
        CHECK(term.m % 2 == 1);  // even m hit poles of Gamma(1 - m/2)
        CHECK(term.mode.evaluate(0.0) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(term.mode.evaluate(1.0)) <= 1e-13);
    }
    CHECK(ex.truncation_m == ex.terms.back().m);
    CHECK(ex.first_omitted > 0.0);
    CHECK(ex.first_omitted < std::abs(ex.terms.back().prefactor) * std::pow(0.1, ex.truncation_m));
    CHECK(s.expansion(0.1, 2).terms.size() == 2);
    CHECK(s.mode_table_size() >= 10);
    CHECK(s.mode_table_size() <= FracSolver::kModeCap);
}

TEST_CASE("series and long-time expansion agree") {
    // The alternating series converges slowly off the axis; with 2000 modes
    // its truncation error drops below 1e-12.
    const FracSolver s(FracProblem{0.5, 1.0, 1.0, 3, 1.0});
    for (double x : {0.25, 0.5, 0.75}) {
        const AsymptoticSolution a = s.asymptotic(x, 100.0);
        CHECK(a.est_error < 1e-18);
        CHECK(std::abs(a.value - s.series(x, 100.0, 2000).value) <= 2e-12);
    }
    const FracSolver wave(FracProblem{1.5, 2.0, 1.0, 2, 1.0});
    for (double x : {0.0, 0.4}) {
        const AsymptoticSolution a = wave.asymptotic(x, 50.0);
        CHECK(std::abs(a.value - wave.series(x, 50.0, 2000).value) <= 1e-8 + 10.0 * a.est_error);
    }
}

TEST_CASE("free functions match the solver") {
    const FracProblem pr{0.7, 2.0, 1.5, 2, 3.0};
    const FracSolver s(pr);
    CHECK(solve_series(pr, 0.4, 2.0, 50).value == s.series(0.4, 2.0, 50).value);
    CHECK(solve_asymptotic(pr, 0.4, 200.0).value == s.asymptotic(0.4, 200.0).value);
}

TEST_CASE("Caputo derivative identity") {
    const std::vector<double> grid = uniform_grid(0.0, 1.0, 0.1);
    CHECK(ml_derivative_identity_check(0.5, 1.0, grid) <= 1e-12);
    CHECK(ml_derivative_identity_check(0.75, 2.0, grid) <= 1e-12);
    CHECK(ml_derivative_identity_check(1.0, 1.0, grid) <= 1e-15);
    CHECK_THROWS_AS(ml_derivative_identity_check(0.0, 1.0, grid), std::domain_error);
    CHECK_THROWS_AS(ml_derivative_identity_check(0.5, 0.0, grid), std::domain_error);
}
