#include <cmath>
#include <random>
#include <stdexcept>

#include "besselkit/polynomial.hpp"
#include "doctest.h"

using besselkit::Accumulation;
using besselkit::Polynomial;

TEST_CASE("evaluate on small exact cases") {
    CHECK(Polynomial{1.0}.evaluate(0.7) == 1.0);
    CHECK(Polynomial{1.0, 0.0, -1.0}.evaluate(1.0) == 0.0);
    CHECK(Polynomial{1.0, 0.0, -1.0}.evaluate(0.5) == 0.75);
    CHECK(Polynomial{1.0, 0.0, -1.0}.evaluate(0.5, Accumulation::extended) == 0.75);
}

TEST_CASE("canonical form trims exact trailing zeros only") {
    const Polynomial p{1.0, 2.0, 0.0, 0.0};
    CHECK(p.degree() == 1);
    CHECK(p == Polynomial{1.0, 2.0});
    const Polynomial tiny{1.0, 1e-300};
    CHECK(tiny.degree() == 1);
    CHECK(Polynomial{}.is_zero());
    CHECK(Polynomial{0.0, 0.0}.degree() == 0);
    CHECK(Polynomial{-0.0} == Polynomial{0.0});
}

TEST_CASE("add_scaled examples") {
    CHECK(add_scaled(Polynomial{1.0}, Polynomial{1.0}, 1.0, -1.0) == Polynomial{0.0});
    CHECK(add_scaled(Polynomial{1.0}, Polynomial{1.0}, 1.0, -1.0).is_zero());
    CHECK(add_scaled(Polynomial{1.0, 0.0, -1.0}, Polynomial{0.0, 1.0}, 2.0, 3.0) == Polynomial{2.0, 3.0, -2.0});
    CHECK(add_scaled(Polynomial{1.0}, Polynomial{1.0, 0.0, -1.0}, 0.0, 1.0) == Polynomial{1.0, 0.0, -1.0});
}

TEST_CASE("add_scaled is commutative and associative on dyadic coefficients") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-64, 64);
    auto dyadic = [&](int deg) {
        std::vector<double> c(static_cast<std::size_t>(deg) + 1);
        for (double& v : c) v = num(rng) / 8.0;
        return Polynomial(c);
    };
    for (int i = 0; i < 50; ++i) {
        const Polynomial a = dyadic(i % 7), b = dyadic((i * 3) % 5), c = dyadic(i % 4);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("evaluation is linear within rounding") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0), x01(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        std::vector<double> ca(7), cb(4);
        for (double& v : ca) v = u(rng);
        for (double& v : cb) v = u(rng);
        const Polynomial a(ca), b(cb);
        const double alpha = u(rng), beta = u(rng), x = x01(rng);
        const double lhs = add_scaled(a, b, alpha, beta).evaluate(x);
        const double rhs = alpha * a.evaluate(x) + beta * b.evaluate(x);
        double scale = 0.0;
        for (std::size_t r = 0; r < ca.size(); ++r) scale += std::abs(alpha * ca[r]) + (r < cb.size() ? std::abs(beta * cb[r]) : 0.0);
        CHECK(std::abs(lhs - rhs) <= 4.0 * 2.220446049250313e-16 * 8.0 * scale);
    }
}

TEST_CASE("compensated Horner recovers a cancelling sum") {
    // (1 - x)^8 expanded; near x = 1 plain Horner loses most digits.
    const Polynomial p{1.0, -8.0, 28.0, -56.0, 70.0, -56.0, 28.0, -8.0, 1.0};
    const double x = 0.99;
    const double exact = std::pow(1.0 - x, 8);  // 1 - x is exact here
    CHECK(std::abs(p.evaluate(x, Accumulation::extended) - exact) <= 1e-9 * exact);
    CHECK(std::abs(p.evaluate(x) - exact) > 1e-3 * exact);
}

TEST_CASE("json round trip") {
    const Polynomial p{1.0, 0.0, -1.0};
    CHECK(to_json(p) == R"({"coeffs":[1.0,0.0,-1.0]})");
    CHECK(besselkit::polynomial_from_json(to_json(p)) == p);
    const Polynomial q{0.1, -2.5e-300, 3.0};
    CHECK(besselkit::polynomial_from_json(to_json(q)) == q);
    CHECK_THROWS_AS(besselkit::polynomial_from_json("{\"c\":[1]}"), std::invalid_argument);
    CHECK_THROWS_AS(besselkit::polynomial_from_json("not json"), std::invalid_argument);
}
