#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "besselkit/lambda_operator.hpp"
#include "besselkit/polynomial.hpp"

namespace besselkit {

enum class Method {
    BaRescaled,  ///< x^p / (2^p p!) * Ba_n(x / z_p)
    BeRescaled,  ///< same with Be_n
    LLG,         ///< integral-representation truncation L_n^{(p)}
    Taylor,      ///< power series of J_p truncated at total degree 2n + p
};

std::string_view method_name(Method m);
/// "ba", "be", "llg", "taylor".
std::optional<Method> parse_method(std::string_view name);

struct ApproxSpec {
    Method method = Method::BaRescaled;
    double p = 0.0;
    int n = 10;
};

/// A ready-to-evaluate approximation to J_p. For the rescaled families the
/// polynomial is generated once at construction.
class Approximation {
public:
    /// Throws std::domain_error if p is outside the method's range
    /// (p > -1 for the rescaled families, p >= 0 for LLG and Taylor) and
    /// std::invalid_argument for n < 0 (n < 1 for LLG).
    explicit Approximation(const ApproxSpec& spec, Accumulation mode = Accumulation::standard);

    [[nodiscard]] const ApproxSpec& spec() const { return spec_; }
    [[nodiscard]] double evaluate(double x) const;
    double operator()(double x) const { return evaluate(x); }

private:
    ApproxSpec spec_;
    Accumulation mode_;
    Polynomial family_poly_;  // Ba_n or Be_n for the rescaled methods
    double zp_ = 1.0;
    double gamma_p1_ = 1.0;
};

double eval_ba_rescaled(double p, int n, double x);
double eval_be_rescaled(double p, int n, double x);

/// L_n^{(p)}(x) = sum_{m=0}^n (-1)^m n^{1-2m} (m+n-1)! / (m! (n-m)! Gamma(m+p+1)) (x/2)^{2m+p}.
/// Factorials are carried as log-gamma values.
double eval_llg(double p, int n, double x);

/// Partial sum of sum_m (-1)^m (x/2)^{2m+p} / (m! Gamma(m+p+1)) over 2m + p <= degree.
double eval_taylor(double p, double degree, double x);

struct ErrorProfile {
    std::vector<double> grid;
    std::vector<double> values_ref;
    std::vector<double> values_approx;
    double sup_error = 0.0;
    /// Smallest grid point with |approx - ref| > threshold; empty when the
    /// approximation stays within threshold on the whole grid.
    std::optional<double> first_deviation_x;

    /// first_deviation_x, or +infinity when there is none.
    [[nodiscard]] double deviation_or_infinity() const;
};

/// Uniform grid start, start+step, ... up to and including stop (within
/// half a step). Points are computed as start + i*step, not accumulated.
std::vector<double> uniform_grid(double start, double stop, double step);

/// Generic comparison harness. `grid` must be sorted ascending.
ErrorProfile profile(const std::function<double(double)>& approx, const std::function<double(double)>& reference,
                     std::span<const double> grid, double threshold);

/// Profile of one approximation against the reference J_p.
ErrorProfile profile(const ApproxSpec& spec, std::span<const double> grid, double threshold,
                     Accumulation mode = Accumulation::standard);

}  // namespace besselkit
