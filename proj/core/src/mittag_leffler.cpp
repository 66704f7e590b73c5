#include "besselkit/mittag_leffler.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "besselkit/precision.hpp"
#include "besselkit/quadrature.hpp"

namespace besselkit {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTargetRelative = 1e-13;

void require_argument(double gamma, double z) {
    if (!(gamma > 0.0 && gamma <= 2.0)) {
        std::ostringstream msg;
        msg << "Mittag-Leffler order must lie in (0, 2], got " << gamma;
        throw std::domain_error(msg.str());
    }
    if (!(z >= 0.0)) {
        std::ostringstream msg;
        msg << "E_gamma[-z] is evaluated for z >= 0, got z=" << z;
        throw std::domain_error(msg.str());
    }
}

// (2/gamma) exp(t cos(pi/gamma)) cos(t sin(pi/gamma)), t = z^{1/gamma}; only for 1 < gamma < 2.
double oscillating_part(double gamma, double z) {
    const double t = std::pow(z, 1.0 / gamma);
    const double phi = kPi / gamma;
    return (2.0 / gamma) * std::exp(t * std::cos(phi)) * std::cos(t * std::sin(phi));
}

// sin(pi x) with exact zeros at integers.
double sin_pi(double x) {
    const double r = std::fmod(x, 2.0);
    if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
    return std::sin(kPi * r);
}

}  // namespace

double reciprocal_gamma(double x) {
    if (x > 0.0) {
        if (x < 170.0) return 1.0 / std::tgamma(x);
        return std::exp(-std::lgamma(x));
    }
    if (x == std::nearbyint(x)) return 0.0;
    // Reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi.
    const double s = sin_pi(x);
    if (1.0 - x < 170.0) return std::tgamma(1.0 - x) * s / kPi;
    return std::copysign(std::exp(std::lgamma(1.0 - x)), s) * std::abs(s) / kPi;
}

SeriesEvaluation mittag_leffler_series(double gamma, double z) {
    require_argument(gamma, z);
    SeriesEvaluation out;
    CompensatedSum sum;
    sum += 1.0;
    out.magnitude_sum = 1.0;
    out.terms = 1;
    if (z == 0.0) {
        out.value = 1.0;
        out.converged = true;
        return out;
    }
    const double log_z = std::log(z);
    double prev = std::numeric_limits<double>::infinity();
    for (int m = 1; m < 4000; ++m) {
        const double md = static_cast<double>(m);
        const double arg = gamma * md + 1.0;
        double mag = 0.0;
        if (arg < 170.0) {
            mag = std::pow(z, md) / std::tgamma(arg);
        } else {
            mag = std::exp(md * log_z - std::lgamma(arg));
        }
        if (!std::isfinite(mag)) break;
        sum += (m % 2 == 0) ? mag : -mag;
        out.magnitude_sum += mag;
        out.terms = m + 1;
        if (mag < prev && mag <= 1e-17 * std::abs(sum.value())) {
            out.converged = true;
            break;
        }
        if (mag == 0.0) {
            out.converged = true;
            break;
        }
        prev = mag;
    }
    out.value = sum.value();
    return out;
}

AsymptoticEvaluation mittag_leffler_asymptotic(double gamma, double z) {
    require_argument(gamma, z);
    if (z == 0.0) throw std::domain_error("asymptotic Mittag-Leffler expansion needs z > 0");
    AsymptoticEvaluation out;
    CompensatedSum sum;
    const double log_z = std::log(z);
    double prev = std::numeric_limits<double>::infinity();
    out.first_omitted = 0.0;
    for (int m = 1; m < 2000; ++m) {
        const double md = static_cast<double>(m);
        const double rg = reciprocal_gamma(1.0 - md * gamma);
        if (rg == 0.0) continue;
        const double mag = std::abs(rg) * std::exp(-md * log_z);
        const double term = ((m % 2 == 1) ? 1.0 : -1.0) * std::copysign(mag, rg);
        if (!(mag <= prev) || mag <= 1e-17 * std::abs(sum.value())) {
            out.first_omitted = std::isfinite(mag) ? mag : std::numeric_limits<double>::infinity();
            break;
        }
        sum += term;
        prev = mag;
        out.terms = m;
    }
    out.value = sum.value();
    return out;
}

double mittag_leffler_integral(double gamma, double z) {
    require_argument(gamma, z);
    if (gamma == 1.0 || gamma == 2.0 || z == 0.0) {
        throw std::domain_error("spectral integral needs gamma not in {1, 2} and z > 0");
    }
    const double t = std::pow(z, 1.0 / gamma);
    const double c = std::cos(gamma * kPi);
    const double s = std::sin(gamma * kPi);
    const double inv_gamma = 1.0 / gamma;
    // r = s^{1/gamma} on [0,1] and r = u^{-1/gamma} on [0,1] for the tail.
    auto near = [&](double v) { return std::exp(-t * std::pow(v, inv_gamma)) / (v * v + 2.0 * c * v + 1.0); };
    auto tail = [&](double u) {
        if (u == 0.0) return 0.0;
        return std::exp(-t * std::pow(u, -inv_gamma)) / (u * u + 2.0 * c * u + 1.0);
    };
    auto both = [&](double tol) {
        return integrate_adaptive(near, 0.0, 1.0, tol, 50).value + integrate_adaptive(tail, 0.0, 1.0, tol, 50).value;
    };
    const double rough = both(1e-8);
    const double refined = both(std::max(1e-15 * std::abs(rough), 1e-300));
    double value = s / (gamma * kPi) * refined;
    if (gamma > 1.0) value += oscillating_part(gamma, z);
    return value;
}

double mittag_leffler(double gamma, double z) {
    require_argument(gamma, z);
    if (z == 0.0) return 1.0;
    if (gamma == 1.0) return std::exp(-z);
    if (gamma == 2.0) return std::cos(std::sqrt(z));
    if (z <= kMittagLefflerCrossover) {
        const SeriesEvaluation s = mittag_leffler_series(gamma, z);
        if (s.converged && 4e-16 * s.magnitude_sum <= kTargetRelative * std::abs(s.value)) return s.value;
    } else {
        const AsymptoticEvaluation a = mittag_leffler_asymptotic(gamma, z);
        const double value = a.value + (gamma > 1.0 ? oscillating_part(gamma, z) : 0.0);
        if (a.first_omitted <= kTargetRelative * std::abs(value)) return value;
    }
    return mittag_leffler_integral(gamma, z);
}

}  // namespace besselkit
