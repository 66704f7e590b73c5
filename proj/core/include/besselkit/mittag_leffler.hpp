#pragma once

namespace besselkit {

/// 1/Gamma(x), exactly zero at x = 0, -1, -2, ...
double reciprocal_gamma(double x);

/// Argument at which mittag_leffler() switches from the power series to the
/// large-argument expansion.
inline constexpr double kMittagLefflerCrossover = 5.0;

struct SeriesEvaluation {
    double value = 0.0;
    /// Sum of |terms|; value carries roughly 1e-16 * magnitude_sum absolute error.
    double magnitude_sum = 0.0;
    int terms = 0;
    bool converged = false;
};

/// sum_{m>=0} (-z)^m / Gamma(gamma m + 1).
SeriesEvaluation mittag_leffler_series(double gamma, double z);

struct AsymptoticEvaluation {
    double value = 0.0;
    /// Magnitude of the first omitted (nonzero) term.
    double first_omitted = 0.0;
    int terms = 0;
};

/// sum_{m>=1} (-1)^{m+1} z^{-m} / Gamma(1 - m gamma), truncated just before
/// the smallest term (terms that vanish at poles of Gamma are skipped).
/// This is the algebraic part only; for 1 < gamma < 2 mittag_leffler() adds
/// the oscillating exponential contribution.
AsymptoticEvaluation mittag_leffler_asymptotic(double gamma, double z);

/// E_gamma[-z] for 0 < gamma <= 2 and z >= 0.
///
/// gamma = 1 and gamma = 2 use exp(-z) and cos(sqrt z). Otherwise the power
/// series is used for z <= kMittagLefflerCrossover and the asymptotic
/// expansion above it; when the chosen expansion cannot deliver 1e-13
/// relative accuracy (series cancellation for small gamma, slow asymptotics
/// for gamma near 1) the value comes from the spectral integral
///   E_gamma(-t^gamma) = \int_0^inf e^{-r t} K_gamma(r) dr  (+ oscillating part for gamma > 1).
/// Throws std::domain_error for gamma outside (0, 2] or z < 0.
double mittag_leffler(double gamma, double z);

/// The spectral-integral route on its own (gamma not 1 or 2, z > 0).
double mittag_leffler_integral(double gamma, double z);

}  // namespace besselkit
