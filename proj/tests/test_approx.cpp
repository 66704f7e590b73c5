#include <boost/math/special_functions/bessel.hpp>
#include <cmath>

#include "besselkit/approx.hpp"
#include "doctest.h"

using namespace besselkit;

namespace {

double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// LLG polynomial from plain factorials; exact in double for n <= 10.
double llg_oracle(double p, int n, double x) {
    double sum = 0.0;
    for (int m = 0; m <= n; ++m) {
        const double c = std::pow(n, 1 - 2 * m) * factorial(m + n - 1) / (factorial(m) * factorial(n - m) * std::tgamma(m + p + 1.0));
        sum += ((m % 2) ? -c : c) * std::pow(0.5 * x, 2 * m + p);
    }
    return sum;
}

double sup_against_jtilde(const Polynomial& f, double p) {
    const OrderContext order(p);
    double worst = 0.0;
    for (double x : uniform_grid(0.0, 1.0, 0.001)) worst = std::max(worst, std::abs(f.evaluate(x) - eval_jtilde(order, 1, x)));
    return worst;
}

}  // namespace

TEST_CASE("rescaled Ba examples") {
    for (int n : {0, 1, 5, 10}) CHECK(eval_ba_rescaled(0.0, n, 0.0) == 1.0);
    const double z = OrderContext(0.0).zero(1);
    for (int n : {1, 4, 10}) CHECK(std::abs(eval_ba_rescaled(0.0, n, z)) <= 1e-13);
    const double err = eval_ba_rescaled(3.0, 10, 5.0) - boost::math::cyl_bessel_j(3.0, 5.0);
    CHECK(std::abs(err) <= 1e-3);
    CHECK(err == doctest::Approx(2.492801e-04).epsilon(1e-5));
    // Be route exists and also reproduces J_p near the origin.
    CHECK(eval_be_rescaled(1.0, 8, 1.0) == doctest::Approx(boost::math::cyl_bessel_j(1.0, 1.0)).epsilon(1e-6));
}

TEST_CASE("LLG polynomial") {
    CHECK(eval_llg(0.0, 10, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    // Alternating terms at x = 9 cancel, so both sides carry ~1e-12 rounding.
    for (double p : {0.0, 1.5, 3.0}) {
        for (double x : {0.0, 0.7, 3.0, 9.0}) {
            CHECK(eval_llg(p, 10, x) == doctest::Approx(llg_oracle(p, 10, x)).epsilon(1e-11).scale(1.0));
        }
    }
    // Coefficients differ from the power series at O(1/n^2), so near the
    // origin the error is ~1e-4 at n = 10 and shrinks a hundredfold per
    // tenfold increase of n.
    double worst = 0.0;
    for (double x = 0.0; x <= 1.0; x += 0.01) worst = std::max(worst, std::abs(eval_llg(0.0, 10, x) - bessel_j(0.0, x)));
    CHECK(worst <= 2e-4);
    const double e10 = std::abs(eval_llg(0.0, 10, 1.0) - bessel_j(0.0, 1.0));
    const double e100 = std::abs(eval_llg(0.0, 100, 1.0) - bessel_j(0.0, 1.0));
    CHECK(e10 / e100 == doctest::Approx(100.0).epsilon(0.05));
    // n = 20 needs 39!, which only the log-space form survives without overflow trouble.
    CHECK(std::isfinite(eval_llg(5.0, 20, 30.0)));
    CHECK_THROWS_AS(eval_llg(0.0, 0, 1.0), std::invalid_argument);
}

TEST_CASE("truncated Taylor series") {
    for (double x : {0.0, 0.3, 5.0}) CHECK(eval_taylor(0.0, 0.0, x) == 1.0);
    CHECK(eval_taylor(0.0, 20.0, 1.0) == doctest::Approx(boost::math::cyl_bessel_j(0.0, 1.0)).epsilon(1e-15));
    CHECK(std::abs(eval_taylor(0.0, 20.0, 30.0) - bessel_j(0.0, 30.0)) > 1e3);
    // Non-integer p: total degree 2m + p <= 21.5 keeps m = 0..10.
    const double x = 2.0;
    double manual = 0.0;
    for (int m = 0; m <= 10; ++m) manual += std::pow(-1.0, m) * std::pow(0.5 * x, 2 * m + 1.5) / (factorial(m) * std::tgamma(m + 2.5));
    CHECK(eval_taylor(1.5, 21.5, x) == doctest::Approx(manual).epsilon(1e-15));
    CHECK(eval_taylor(3.0, 2.0, 1.0) == 0.0);
    CHECK_THROWS_AS(eval_taylor(0.0, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("uniform grid") {
    const auto g = uniform_grid(0.0, 40.0, 0.01);
    CHECK(g.size() == 4001);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == doctest::Approx(40.0).epsilon(1e-15));
    CHECK(g[1234] == 1234 * 0.01);
    CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(uniform_grid(1.0, 0.0, 0.1), std::invalid_argument);
}

TEST_CASE("methods and domains") {
    CHECK(parse_method("llg") == Method::LLG);
    CHECK_FALSE(parse_method("chebyshev").has_value());
    CHECK(method_name(Method::BeRescaled) == "be");
    CHECK_THROWS_AS(Approximation({Method::LLG, -0.5, 10}), std::domain_error);
    CHECK_THROWS_AS(Approximation({Method::Taylor, -0.5, 10}), std::domain_error);
    CHECK_THROWS_AS(Approximation({Method::BaRescaled, -1.0, 10}), std::domain_error);
    CHECK_THROWS_AS(Approximation({Method::BaRescaled, 0.0, -1}), std::invalid_argument);
    CHECK_NOTHROW(Approximation({Method::BaRescaled, -0.5, 10}));
    const Approximation plain({Method::BaRescaled, 2.0, 10});
    const Approximation ext({Method::BaRescaled, 2.0, 10}, Accumulation::extended);
    for (double x : {1.0, 7.0, 12.0}) CHECK(plain(x) == doctest::Approx(ext(x)).epsilon(1e-12));
}

TEST_CASE("profile harness") {
    const auto grid = uniform_grid(0.0, 10.0, 0.05);
    const Approximation ba({Method::BaRescaled, 0.0, 10});
    const ErrorProfile self = profile([&](double x) { return ba(x); }, [&](double x) { return ba(x); }, grid, 0.01);
    CHECK(self.sup_error == 0.0);
    CHECK_FALSE(self.first_deviation_x.has_value());
    CHECK(std::isinf(self.deviation_or_infinity()));

    const ErrorProfile nan_profile = profile([](double) { return std::nan(""); }, [](double) { return 0.0; }, grid, 0.01);
    CHECK(std::isinf(nan_profile.sup_error));
    CHECK(nan_profile.first_deviation_x == 0.0);

    const ErrorProfile pr = profile(ApproxSpec{Method::Taylor, 0.0, 3}, grid, 0.01);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(pr.values_approx[i] - pr.values_ref[i]));
    CHECK(pr.sup_error == worst);
    REQUIRE(pr.first_deviation_x.has_value());
    for (std::size_t i = 0; grid[i] < *pr.first_deviation_x; ++i) CHECK(std::abs(pr.values_approx[i] - pr.values_ref[i]) <= 0.01);
}

TEST_CASE("range of validity on [0, 40]") {
    const auto grid = uniform_grid(0.0, 40.0, 0.01);
    std::vector<double> previous(3, -1.0);
    for (double p : {0.0, 1.5, 3.0, 5.0}) {
        INFO("p = " << p);
        const double ba = profile(ApproxSpec{Method::BaRescaled, p, 10}, grid, 0.01).deviation_or_infinity();
        const double llg = profile(ApproxSpec{Method::LLG, p, 10}, grid, 0.01).deviation_or_infinity();
        const double taylor = profile(ApproxSpec{Method::Taylor, p, 10}, grid, 0.01).deviation_or_infinity();
        CHECK(ba >= llg);
        CHECK(ba >= taylor);
        CHECK(ba > previous[0]);
        CHECK(llg > previous[1]);
        CHECK(taylor > previous[2]);
        previous = {ba, llg, taylor};
    }
    // More iterations never shrink the range.
    for (Method m : {Method::BaRescaled, Method::LLG, Method::Taylor}) {
        double prev = 0.0;
        for (int n = 1; n <= 12; ++n) {
            const double d = profile(ApproxSpec{m, 0.0, n}, grid, 0.01).deviation_or_infinity();
            CHECK(d >= prev);
            prev = d;
        }
    }
    const ErrorProfile p5 = profile(ApproxSpec{Method::BaRescaled, 5.0, 10}, grid, 0.01);
    const ErrorProfile p0 = profile(ApproxSpec{Method::BaRescaled, 0.0, 10}, grid, 0.01);
    CHECK(p5.deviation_or_infinity() > p0.deviation_or_infinity());
}

TEST_CASE("convergence of Ba_n to Jtilde_p") {
    for (double p : {0.0, 1.0, 2.0}) {
        const FamilyState st = family_generate(Family::Ba, p, 11);
        double prev = std::numeric_limits<double>::infinity();
        for (int n = 1; n <= 10; ++n) {
            const double e = sup_against_jtilde(st.iterate(n), p);
            CHECK(e <= prev);
            prev = e;
        }
        // Successive iterates approach each other at rate (z_{p,1}/z_{p,2})^2.
        const OrderContext& order = st.context().order();
        const double rate = std::pow(order.zero(1) / order.zero(2), 2.0);
        auto distance = [&](int n) {
            double d = 0.0;
            for (double x : uniform_grid(0.0, 1.0, 0.001)) d = std::max(d, std::abs(st.iterate(n + 1).evaluate(x) - st.iterate(n).evaluate(x)));
            return d;
        };
        for (int n = 5; n <= 9; ++n) {
            const double ratio = distance(n + 1) / distance(n);
            CHECK(ratio >= rate / 2.0);
            CHECK(ratio <= rate * 2.0);
        }
    }
    // At fixed n and x the order-0 polynomial is the better one.
    const FamilyState b0 = family_generate(Family::Ba, 0.0, 5);
    const FamilyState b2 = family_generate(Family::Ba, 2.0, 5);
    const OrderContext o0(0.0), o2(2.0);
    for (int n = 1; n <= 5; ++n) {
        for (double x : {0.3, 0.5, 0.7}) {
            CHECK(std::abs(b0.iterate(n).evaluate(x) - eval_jtilde(o0, 1, x)) <
                  std::abs(b2.iterate(n).evaluate(x) - eval_jtilde(o2, 1, x)));
        }
    }
}
