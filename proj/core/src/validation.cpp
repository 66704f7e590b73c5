#include "besselkit/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "besselkit/approx.hpp"
#include "besselkit/bessel.hpp"
#include "besselkit/fracmodes.hpp"
#include "besselkit/integral_oracles.hpp"
#include "besselkit/lambda_operator.hpp"
#include "besselkit/mittag_leffler.hpp"

namespace besselkit {
namespace {

constexpr double kPi = std::numbers::pi;

struct RandomCase {
    double p;
    Polynomial f;
};

class CaseGenerator {
public:
    explicit CaseGenerator(std::uint64_t seed) : rng_(seed) {}

    RandomCase next() {
        static constexpr double kOrders[] = {0.0, 0.5, 1.0, 2.0, 5.0, -0.5, 1.5};
        std::uniform_int_distribution<int> order_pick(0, 6);
        std::uniform_int_distribution<int> degree_pick(0, 10);
        std::uniform_real_distribution<double> coeff(-1.0, 1.0);
        const double p = kOrders[order_pick(rng_)];
        const int s = degree_pick(rng_);
        std::vector<double> cs(static_cast<std::size_t>(s) + 1);
        for (double& c : cs) c = coeff(rng_);
        while (cs.back() == 0.0) cs.back() = coeff(rng_);
        return {p, Polynomial(std::move(cs))};
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

double max_abs_coeff(const Polynomial& p) {
    double m = 0.0;
    for (double c : p.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

// Largest |a_j - b_j| relative to the largest coefficient of b.
double coeff_distance(const Polynomial& a, const Polynomial& b) {
    const int deg = std::max(a.degree(), b.degree());
    double worst = 0.0;
    for (int j = 0; j <= deg; ++j) worst = std::max(worst, std::abs(a.coeff(j) - b.coeff(j)));
    const double scale = max_abs_coeff(b);
    return scale > 0.0 ? worst / scale : worst;
}

void add(std::vector<CheckResult>& out, std::string name, double residual, double tol) {
    out.push_back({std::move(name), residual <= tol, residual, tol});
}

void add_law(std::vector<CheckResult>& out, std::string name, const LawResult& law, double tol) {
    out.push_back({std::move(name), law.failures == 0, law.worst, tol});
}

std::string format_order(double p) {
    std::string s = std::to_string(p);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

double sup_error_against_jtilde(const Polynomial& f, const OrderContext& order, std::span<const double> grid) {
    double worst = 0.0;
    for (double x : grid) worst = std::max(worst, std::abs(f.evaluate(x) - eval_jtilde(order, 1, x)));
    return worst;
}

}  // namespace

double fixed_point_residual(double p, int n, int points, double quad_tol) {
    const OrderContext order(p);
    auto f = [&](double v) { return eval_jtilde(order, n, v); };
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(points - 1);
        const double applied = lambda_by_quadrature(order, n, f, x, quad_tol);
        worst = std::max(worst, std::abs(applied - f(x)));
    }
    return worst;
}

FourierBesselResidual fourier_bessel_residual(double p, int k_max, int n_max) {
    const OperatorContext ctx(p);
    const OrderContext& order = ctx.order();
    const auto seq = iterate_In_sequence(ctx, n_max);
    FourierBesselResidual out;
    for (int k = 1; k <= k_max; ++k) {
        const double target_ratio = std::pow(ctx.zp() / order.zero(k), 2.0);
        double prev = 0.0;
        for (int n = 0; n <= n_max; ++n) {
            const Polynomial in = seq[static_cast<std::size_t>(n)].raw();
            const double quad = fourier_bessel_coefficient(order, k, [&](double x) { return in.evaluate(x); });
            const double closed = fourier_bessel_closed_form(order, k, n);
            out.closed_form_relative = std::max(out.closed_form_relative, std::abs(quad - closed) / std::abs(closed));
            if (n > 0) out.ratio = std::max(out.ratio, std::abs(quad / prev - target_ratio));
            prev = quad;
        }
    }
    return out;
}

LawResult degree_law(int cases, std::uint64_t seed) {
    CaseGenerator gen(seed);
    LawResult out;
    for (int i = 0; i < cases; ++i) {
        const RandomCase c = gen.next();
        const OperatorContext ctx(c.p);
        const int got = apply_lambda(ctx, c.f).degree();
        const int diff = std::abs(got - (c.f.degree() + 2));
        out.worst = std::max(out.worst, static_cast<double>(diff));
        if (diff != 0) ++out.failures;
    }
    return out;
}

LawResult boundary_law(int cases, std::uint64_t seed, double tol) {
    CaseGenerator gen(seed);
    LawResult out;
    for (int i = 0; i < cases; ++i) {
        const RandomCase c = gen.next();
        const OperatorContext ctx(c.p);
        const Polynomial g = apply_lambda(ctx, c.f);
        double scale = 0.0;
        for (double v : g.coeffs()) scale += std::abs(v);
        const double r = std::abs(g.evaluate(1.0)) / std::max(1.0, scale);
        out.worst = std::max(out.worst, r);
        if (r > tol) ++out.failures;
    }
    return out;
}

LawResult scale_invariance_law(int cases, std::uint64_t seed, double tol) {
    CaseGenerator gen(seed);
    std::uniform_real_distribution<double> alpha_pick(0.1, 10.0);
    std::uniform_int_distribution<int> exponent_pick(-20, 20);
    LawResult out;
    for (int i = 0; i < cases; ++i) {
        const RandomCase c = gen.next();
        const OperatorContext ctx(c.p);
        const Polynomial ref = apply_lambda_hat(ctx, c.f);

        // Power-of-two scalings are exact in binary floating point, so the
        // normalized result must be bitwise identical.
        const double pow2 = std::ldexp((i % 2 == 0) ? 1.0 : -1.0, exponent_pick(gen.engine()));
        if (!(apply_lambda_hat(ctx, c.f.scaled(pow2)) == ref)) {
            ++out.failures;
            out.worst = std::max(out.worst, coeff_distance(apply_lambda_hat(ctx, c.f.scaled(pow2)), ref));
        }

        // A general scale only commutes with rounding approximately; the
        // bound is relative to the conditioning of Lambda[f](0).
        const double alpha = ((i % 3 == 0) ? -1.0 : 1.0) * alpha_pick(gen.engine());
        double magnitude = 0.0;
        for (int r = 0; r <= c.f.degree(); ++r) magnitude += std::abs(c.f.coeff(r) * ctx.a(r));
        const double cond = magnitude / std::abs(apply_lambda(ctx, c.f).coeff(0));
        const double d = coeff_distance(apply_lambda_hat(ctx, c.f.scaled(alpha)), ref) / cond;
        out.worst = std::max(out.worst, d);
        if (d > tol) ++out.failures;
    }
    return out;
}

LawResult power_poly_law(int cases, std::uint64_t seed, double tol) {
    CaseGenerator gen(seed);
    std::uniform_int_distribution<int> n_pick(1, 8);
    LawResult out;
    for (int i = 0; i < cases; ++i) {
        const RandomCase c = gen.next();
        const int n = n_pick(gen.engine());
        const OperatorContext ctx(c.p);
        Polynomial iterated = c.f;
        for (int k = 0; k < n; ++k) iterated = apply_lambda(ctx, iterated);
        const double d = coeff_distance(lambda_power_poly(ctx, n, c.f), iterated);
        out.worst = std::max(out.worst, d);
        if (d > tol) ++out.failures;
    }
    return out;
}

std::vector<CheckResult> run_validation() {
    std::vector<CheckResult> out;
    const std::vector<double> orders{0.0, 0.5, 1.0, 2.0, 5.0};
    const auto unit_grid = uniform_grid(0.0, 1.0, 0.001);

    {
        const OrderContext half(0.5);
        double worst = 0.0;
        for (int k = 1; k <= 20; ++k) worst = std::max(worst, std::abs(half.zero(k) - k * kPi) / (k * kPi));
        add(out, "zeros_half_integer", worst, 1e-12);
    }
    {
        double worst = 0.0;
        for (double p : orders) {
            const OrderContext order(p);
            for (int k = 1; k <= 20; ++k) {
                const double z = order.zero(k);
                const double slope = std::abs(bessel_j_derivative(p, z));
                worst = std::max(worst, std::abs(bessel_j(p, z)) / std::max(1.0, slope));
            }
        }
        add(out, "zeros_residual", worst, 1e-12);
    }
    {
        int violations = 0;
        for (double p : orders) {
            const OrderContext lo(p);
            const OrderContext hi(p + 1.0);
            for (int k = 1; k <= 20; ++k) {
                if (!(lo.zero(k) < hi.zero(k) && hi.zero(k) < lo.zero(k + 1))) ++violations;
            }
        }
        add(out, "zeros_interlacing", violations, 0.0);
    }
    {
        double worst = 0.0;
        for (double p : orders) {
            const OrderContext order(p);
            for (int n = 1; n <= 5; ++n) worst = std::max(worst, std::abs(eval_jtilde(order, n, 0.0) - 1.0));
        }
        add(out, "jtilde_normalization", worst, 0.0);
    }
    {
        double worst = 0.0;
        for (double x : uniform_grid(0.1, 30.0, 0.01)) {
            worst = std::max(worst, std::abs(bessel_j(0.5, x) - std::sqrt(2.0 / (kPi * x)) * std::sin(x)));
        }
        add(out, "bessel_half_integer", worst, 1e-12);
    }

    for (auto [p, n] : {std::pair{0.0, 1}, {1.0, 1}, {2.0, 1}, {0.0, 2}}) {
        add(out, "fixed_point_p" + format_order(p) + "_n" + std::to_string(n), fixed_point_residual(p, n), 1e-8);
    }
    for (double p : {0.0, 1.0, 2.0}) {
        const FourierBesselResidual fb = fourier_bessel_residual(p, 5, 3);
        add(out, "fourier_bessel_closed_form_p" + format_order(p), fb.closed_form_relative, 1e-8);
        add(out, "fourier_bessel_ratio_p" + format_order(p), fb.ratio, 1e-10);
    }

    add_law(out, "degree_law", degree_law(100, 1), 0.0);
    add_law(out, "boundary_law", boundary_law(100, 2), 1e-13);
    add_law(out, "scale_invariance", scale_invariance_law(100, 3), 1e-14);
    add_law(out, "power_poly_equivalence", power_poly_law(100, 4), 1e-12);

    {
        double worst = 0.0;
        for (double p : orders) {
            for (Family fam : {Family::Ba, Family::Be}) {
                const FamilyState st = family_generate(fam, p, 10);
                for (int n = 1; n <= 10; ++n) worst = std::max(worst, std::abs(st.iterate(n).evaluate(1.0)));
            }
        }
        add(out, "family_boundary", worst, 1e-13);
    }
    {
        double worst = 0.0;
        for (double p : {0.0, 0.5, 1.0}) {
            const OperatorContext ctx(p);
            for (int r = 0; r <= 2; ++r) {
                const double ratio = coeff_b(ctx, 51, r) / coeff_b(ctx, 50, r);
                worst = std::max(worst, std::abs(ratio * 4.0 * 2500.0 / ctx.zp2() - 1.0));
            }
        }
        add(out, "coefficient_decay", worst, 0.1);
    }
    {
        const FamilyState ba = family_generate(Family::Ba, 0.0, 10);
        const OrderContext& order = ba.context().order();
        std::vector<double> errs;
        for (int n = 1; n <= 10; ++n) errs.push_back(sup_error_against_jtilde(ba.iterate(n), order, unit_grid));
        int increases = 0;
        for (std::size_t i = 1; i < errs.size(); ++i) increases += errs[i] >= errs[i - 1] ? 1 : 0;
        add(out, "attractor_monotone", increases, 0.0);
        const double target = std::pow(order.zero(1) / order.zero(2), 2.0);
        double worst = 0.0;
        for (std::size_t n = 5; n < errs.size(); ++n) {
            worst = std::max(worst, std::abs(std::log((errs[n] / errs[n - 1]) / target)));
        }
        add(out, "attractor_ratio_log", worst, std::log(2.0));
    }
    {
        const FamilyState ba = family_generate(Family::Ba, 1.0, 5);
        const FamilyState be = family_generate(Family::Be, 1.0, 5);
        const OrderContext& order = ba.context().order();
        double worst = -1.0;
        for (int n = 1; n <= 5; ++n) {
            const double eb = sup_error_against_jtilde(be.iterate(n), order, unit_grid);
            const double ea = sup_error_against_jtilde(ba.iterate(n), order, unit_grid);
            worst = std::max(worst, eb / ea);
        }
        add(out, "be_beats_ba_p1", worst, 1.0 - 1e-12);
    }
    {
        double worst = 0.0;
        for (double z : {4.0, kMittagLefflerCrossover}) {
            const double s = mittag_leffler_series(0.5, z).value;
            const double a = mittag_leffler_asymptotic(0.5, z).value;
            worst = std::max(worst, std::abs(s - a) / std::abs(s));
        }
        add(out, "mittag_leffler_crossover", worst, 1e-5);
    }
    {
        const auto t_grid = uniform_grid(0.0, 1.0, 0.1);
        double worst = 0.0;
        worst = std::max(worst, ml_derivative_identity_check(0.5, 1.0, t_grid));
        worst = std::max(worst, ml_derivative_identity_check(0.75, 2.0, t_grid));
        worst = std::max(worst, ml_derivative_identity_check(1.0, 1.0, t_grid));
        add(out, "mittag_leffler_derivative_identity", worst, 1e-12);
    }
    {
        const FracSolver sphere(FracProblem{1.0, 1.0, 1.0, 3, 1.0});
        double worst = 0.0;
        for (double t : {0.05, 0.2}) {
            for (double r : {0.0, 0.25, 0.5, 0.75}) {
                // Classical ball: 2 sum (-1)^{n+1} sin(n pi r)/(n pi r) exp(-n^2 pi^2 t).
                double ref = 0.0;
                for (int j = 1; j <= 60; ++j) {
                    const double w = j * kPi;
                    const double shape = r == 0.0 ? 1.0 : std::sin(w * r) / (w * r);
                    ref += 2.0 * ((j % 2 == 1) ? 1.0 : -1.0) * shape * std::exp(-w * w * t);
                }
                worst = std::max(worst, std::abs(sphere.series(r, t, 60).value - ref));
            }
        }
        add(out, "fractional_classical_limit", worst, 1e-10);
    }
    {
        double worst = 0.0;
        for (double gamma : {0.5, 1.5}) {
            const FracSolver s(FracProblem{gamma, 1.0, 1.0, 3, 1.0});
            worst = std::max(worst, std::abs(s.series(1.0, 0.5, 50).value));
            worst = std::max(worst, std::abs(s.asymptotic(1.0, 100.0).value));
        }
        add(out, "fractional_boundary", worst, 0.0);
    }
    {
        // Only the m = 1 term: profile proportional to 1 - x^2 for any gamma.
        double worst = 0.0;
        for (double gamma : {0.3, 0.5, 1.5}) {
            const FracSolver s(FracProblem{gamma, 1.0, 1.0, 2, 1.0});
            const double t = std::pow(20.0, 1.0 / gamma);
            const double centre = s.asymptotic(0.0, t, 1).value;
            for (double x : {0.2, 0.5, 0.8}) {
                worst = std::max(worst, std::abs(s.asymptotic(x, t, 1).value / centre - (1.0 - x * x)));
            }
        }
        add(out, "fractional_mode_shape", worst, 1e-12);
    }
    return out;
}

}  // namespace besselkit
