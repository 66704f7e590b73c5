#include "besselkit/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "besselkit/bessel.hpp"

namespace besselkit {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::BaRescaled: return "ba";
        case Method::BeRescaled: return "be";
        case Method::LLG: return "llg";
        case Method::Taylor: return "taylor";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    if (name == "ba") return Method::BaRescaled;
    if (name == "be") return Method::BeRescaled;
    if (name == "llg") return Method::LLG;
    if (name == "taylor") return Method::Taylor;
    return std::nullopt;
}

Approximation::Approximation(const ApproxSpec& spec, Accumulation mode) : spec_(spec), mode_(mode) {
    std::ostringstream msg;
    switch (spec.method) {
        case Method::BaRescaled:
        case Method::BeRescaled: {
            if (spec.n < 0) throw std::invalid_argument("iteration index n must be >= 0");
            const OperatorContext ctx(spec.p);
            const Family fam = spec.method == Method::BaRescaled ? Family::Ba : Family::Be;
            family_poly_ = family_generate(ctx, fam, spec.n).iterate(spec.n);
            zp_ = ctx.zp();
            gamma_p1_ = ctx.order().gamma_p1();
            break;
        }
        case Method::LLG:
        case Method::Taylor:
            if (!(spec.p >= 0.0)) {
                msg << method_name(spec.method) << " approximation needs p >= 0, got " << spec.p;
                throw std::domain_error(msg.str());
            }
            if (spec.n < (spec.method == Method::LLG ? 1 : 0)) {
                throw std::invalid_argument("order index n out of range for " + std::string(method_name(spec.method)));
            }
            break;
    }
}

double Approximation::evaluate(double x) const {
    switch (spec_.method) {
        case Method::BaRescaled:
        case Method::BeRescaled: {
            const double lead = std::pow(0.5 * x, spec_.p) / gamma_p1_;
            return lead * family_poly_.evaluate(x / zp_, mode_);
        }
        case Method::LLG: return eval_llg(spec_.p, spec_.n, x);
        case Method::Taylor: return eval_taylor(spec_.p, 2.0 * spec_.n + spec_.p, x);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double eval_ba_rescaled(double p, int n, double x) { return Approximation({Method::BaRescaled, p, n}).evaluate(x); }

double eval_be_rescaled(double p, int n, double x) { return Approximation({Method::BeRescaled, p, n}).evaluate(x); }

double eval_llg(double p, int n, double x) {
    if (n < 1) throw std::invalid_argument("LLG polynomial needs n >= 1");
    const double nd = static_cast<double>(n);
    const double half = 0.5 * x;
    double sum = 0.0;
    for (int m = 0; m <= n; ++m) {
        const double md = static_cast<double>(m);
        const double log_coeff = std::lgamma(md + nd) - std::lgamma(md + 1.0) - std::lgamma(nd - md + 1.0) -
                                 std::lgamma(md + p + 1.0) + (1.0 - 2.0 * md) * std::log(nd);
        const double power = 2.0 * md + p;
        double mag = 0.0;
        if (half == 0.0) {
            mag = (power == 0.0) ? std::exp(log_coeff) : 0.0;
        } else {
            mag = std::exp(log_coeff + power * std::log(std::abs(half)));
            if (half < 0.0 && std::fmod(power, 2.0) != 0.0) mag = -mag;
        }
        sum += (m % 2 == 0) ? mag : -mag;
    }
    return sum;
}

double eval_taylor(double p, double degree, double x) {
    if (degree < 0.0) throw std::invalid_argument("Taylor degree must be >= 0");
    const double q = 0.25 * x * x;
    double term = std::pow(0.5 * x, p) / std::tgamma(p + 1.0);
    if (p > degree + 1e-9) return 0.0;
    double sum = term;
    for (int m = 1; 2.0 * m + p <= degree + 1e-9; ++m) {
        term *= -q / (static_cast<double>(m) * (static_cast<double>(m) + p));
        sum += term;
    }
    return sum;
}

double ErrorProfile::deviation_or_infinity() const {
    return first_deviation_x.value_or(std::numeric_limits<double>::infinity());
}

std::vector<double> uniform_grid(double start, double stop, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (stop < start) throw std::invalid_argument("grid stop must not precede start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = start + static_cast<double>(i) * step;
    return grid;
}

ErrorProfile profile(const std::function<double(double)>& approx, const std::function<double(double)>& reference,
                     std::span<const double> grid, double threshold) {
    ErrorProfile out;
    out.grid.assign(grid.begin(), grid.end());
    out.values_ref.reserve(grid.size());
    out.values_approx.reserve(grid.size());
    for (double x : grid) {
        const double ref = reference(x);
        const double val = approx(x);
        out.values_ref.push_back(ref);
        out.values_approx.push_back(val);
        double err = std::abs(val - ref);
        if (std::isnan(err)) err = std::numeric_limits<double>::infinity();
        out.sup_error = std::max(out.sup_error, err);
        if (!out.first_deviation_x && err > threshold) out.first_deviation_x = x;
    }
    return out;
}

ErrorProfile profile(const ApproxSpec& spec, std::span<const double> grid, double threshold, Accumulation mode) {
    const Approximation approx(spec, mode);
    const double p = spec.p;
    return profile([&](double x) { return approx(x); }, [p](double x) { return bessel_j(p, x); }, grid, threshold);
}

}  // namespace besselkit
