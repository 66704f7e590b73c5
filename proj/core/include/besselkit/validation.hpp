#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace besselkit {

struct CheckResult {
    std::string name;
    bool passed = false;
    double residual = 0.0;
    double tolerance = 0.0;
};

/// sup over a uniform grid of `points` nodes in [0,1] of
/// |Lambda_{p,n}[Jtilde_{p,n}] - Jtilde_{p,n}|, the operator applied by quadrature.
double fixed_point_residual(double p, int n, int points = 101, double quad_tol = 1e-10);

struct FourierBesselResidual {
    double closed_form_relative = 0.0;  ///< worst |c_quad - c_closed| / |c_closed|
    double ratio = 0.0;                 ///< worst |c(k,n+1)/c(k,n) - (z_p/z_{p,k})^2|
};

/// Quadrature Fourier-Bessel coefficients of x^p I_n(x) against the closed
/// form, for 1 <= k <= k_max and 0 <= n <= n_max.
FourierBesselResidual fourier_bessel_residual(double p, int k_max, int n_max);

/// Randomized structural laws of the operator over `cases` polynomials of
/// degree <= 10 (seeded, so repeatable). Each returns the number of failing
/// cases together with the worst residual seen.
struct LawResult {
    int failures = 0;
    double worst = 0.0;
};
LawResult degree_law(int cases, std::uint64_t seed);
LawResult boundary_law(int cases, std::uint64_t seed, double tol = 1e-13);
LawResult scale_invariance_law(int cases, std::uint64_t seed, double tol = 1e-14);
LawResult power_poly_law(int cases, std::uint64_t seed, double tol = 1e-12);

/// Every built-in check with its measured residual.
std::vector<CheckResult> run_validation();

}  // namespace besselkit
