#pragma once

#include <functional>

#include "besselkit/bessel.hpp"
#include "besselkit/polynomial.hpp"

namespace besselkit {

/// Lambda_{p,n}[f](x) evaluated by nested adaptive Gauss-Legendre quadrature
/// instead of the coefficient algebra. Works for any integrable f, which is
/// what makes it usable as an independent check of the polynomial route and
/// of the fixed-point property of Jtilde_{p,n}.
///
/// `tol` bounds the absolute error of the outer integral; the inner integral
/// runs at a tolerance scaled by u^{2p+2} so the u^{-2p-1} weight does not
/// amplify it.
double lambda_by_quadrature(const OrderContext& order, int n, const std::function<double(double)>& f, double x,
                            double tol = 1e-13);

/// Fourier-Bessel coefficient of g(x) = x^p q(x) on [0,1]:
///   c_k = 2 / J_{p+1}(z_{p,k})^2 * \int_0^1 x g(x) J_p(z_{p,k} x) dx.
double fourier_bessel_coefficient(const OrderContext& order, int k, const std::function<double(double)>& q,
                                  double tol = 1e-15);

/// Closed form of the coefficient of x^p I_n(x):
///   c(k,p,n) = 2 (z_p / z_{p,k})^{2n} / (z_{p,k} J_{p+1}(z_{p,k})).
double fourier_bessel_closed_form(const OrderContext& order, int k, int n);

}  // namespace besselkit
