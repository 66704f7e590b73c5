#include "besselkit/integral_oracles.hpp"

#include <cmath>
#include <stdexcept>

#include "besselkit/quadrature.hpp"

namespace besselkit {

double lambda_by_quadrature(const OrderContext& order, int n, const std::function<double(double)>& f, double x,
                            double tol) {
    if (n < 1) throw std::invalid_argument("operator index n must be >= 1");
    const double p = order.order();
    const double z = order.zero(n);
    const double w = 2.0 * p + 1.0;

    auto inner = [&](double u) {
        const double scale = std::pow(u, w + 1.0) / (w + 1.0);
        const auto r = integrate_adaptive([&](double v) { return std::pow(v, w) * f(v); }, 0.0, u, tol * scale);
        return r.value;
    };
    auto outer = integrate_adaptive([&](double u) { return std::pow(u, -w) * inner(u); }, x, 1.0, tol);
    return z * z * outer.value;
}

double fourier_bessel_coefficient(const OrderContext& order, int k, const std::function<double(double)>& q,
                                  double tol) {
    const double p = order.order();
    const double zk = order.zero(k);
    // x^{p+1} J_p(z x) = z^p x^{2p+1} Jtilde(z x) / (2^p Gamma(p+1)).
    const double lead = std::pow(zk, p) / (std::pow(2.0, p) * order.gamma_p1());
    auto integrand = [&](double x) { return std::pow(x, 2.0 * p + 1.0) * q(x) * jtilde_unit(order, zk * x); };
    const double integral = lead * integrate_adaptive(integrand, 0.0, 1.0, tol).value;
    const double jn = bessel_j(p + 1.0, zk);
    return 2.0 * integral / (jn * jn);
}

double fourier_bessel_closed_form(const OrderContext& order, int k, int n) {
    const double p = order.order();
    const double zk = order.zero(k);
    const double ratio = order.zero(1) / zk;
    return 2.0 * std::pow(ratio, 2.0 * n) / (zk * bessel_j(p + 1.0, zk));
}

}  // namespace besselkit
