#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace besselkit {

/// Raised when an iterative root search fails; the message carries the bracket.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double lo, double hi)
        : std::runtime_error(what), lo_(lo), hi_(hi) {}
    [[nodiscard]] double bracket_lo() const { return lo_; }
    [[nodiscard]] double bracket_hi() const { return hi_; }

private:
    double lo_;
    double hi_;
};

/// A Bessel order p > -1 together with Gamma(p+1) and a lazily grown table of
/// the positive zeros z_{p,1} < z_{p,2} < ...
///
/// Copies share the zero table. Growing it is serialized by a mutex, so one
/// context can be read from several threads.
class OrderContext {
public:
    /// Throws std::domain_error unless p > -1.
    explicit OrderContext(double p);

    [[nodiscard]] double order() const { return p_; }
    /// Gamma(p+1), the "p!" of every normalization.
    [[nodiscard]] double gamma_p1() const { return gamma_p1_; }

    /// k-th positive zero (k >= 1), relative accuracy about 1e-15.
    /// Throws std::invalid_argument for k < 1 and ConvergenceError if the
    /// bracket scan or refinement fails.
    [[nodiscard]] double zero(int k) const;
    /// z_{p,1} .. z_{p,count}.
    [[nodiscard]] std::vector<double> zeros(int count) const;
    [[nodiscard]] int cached_zero_count() const;

private:
    struct ZeroCache {
        std::mutex mu;
        std::vector<double> zeros;
    };

    double p_;
    double gamma_p1_;
    std::shared_ptr<ZeroCache> cache_;
};

struct BesselValue {
    double value = 0.0;
    /// Set when neither the extended-precision series nor the large-argument
    /// expansion reaches 1e-12 relative accuracy (x > 50 with p^2 > x).
    bool accuracy_degraded = false;
};

/// J_p(x). Non-integer orders require x >= 0 (std::domain_error otherwise);
/// integer orders use J_p(-x) = (-1)^p J_p(x).
BesselValue eval_jp(const OrderContext& ctx, double x);

/// J_p(x) for any p > -1 or negative integer p.
double bessel_j(double p, double x);

/// dJ_p/dx via (p/x) J_p(x) - J_{p+1}(x).
double bessel_j_derivative(double p, double x);

/// 2^p Gamma(p+1) y^{-p} J_p(y): the power series of J_p with the leading
/// factor removed. Equals 1 at y = 0 and shares the positive zeros of J_p.
double jtilde_unit(const OrderContext& ctx, double y);

/// Normalized function 2^p Gamma(p+1) (z_{p,n} x)^{-p} J_p(z_{p,n} x); exactly 1 at x = 0.
double eval_jtilde(const OrderContext& ctx, int n, double x);

/// z_{p,k}; same as ctx.zero(k).
double find_zero(const OrderContext& ctx, int k);

/// J_p(x) for a negative integer p via J_{-m}(x) = (-1)^m J_m(x).
/// Throws std::domain_error for anything that is not a negative integer.
double negate_order(double p, double x);

}  // namespace besselkit
