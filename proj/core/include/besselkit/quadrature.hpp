#pragma once

#include <cmath>
#include <limits>
#include <vector>

namespace besselkit {

/// n-point Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendreRule {
public:
    explicit GaussLegendreRule(int n);

    [[nodiscard]] int size() const { return static_cast<int>(nodes_.size()); }
    [[nodiscard]] const std::vector<double>& nodes() const { return nodes_; }
    [[nodiscard]] const std::vector<double>& weights() const { return weights_; }

    template <class F>
    double integrate(F&& f, double a, double b) const {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(mid + half * nodes_[i]);
        return half * sum;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// The shared 12-point rule used by integrate_adaptive.
const GaussLegendreRule& default_rule();

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;
    bool converged = true;
};

namespace detail {

template <class F>
void adapt(const GaussLegendreRule& rule, F& f, double a, double b, double whole, double tol, int depth,
           QuadratureResult& out) {
    const double mid = 0.5 * (a + b);
    const double left = rule.integrate(f, a, mid);
    const double right = rule.integrate(f, mid, b);
    const double diff = std::abs(left + right - whole);
    // Below a few ulps of the local integral the difference is rounding noise.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
    if (diff <= tol || diff <= floor || depth <= 0 || mid <= a || mid >= b) {
        if (diff > tol) out.converged = false;
        out.value += left + right;
        out.error_estimate += diff;
        out.intervals += 2;
        return;
    }
    adapt(rule, f, a, mid, left, 0.5 * tol, depth - 1, out);
    adapt(rule, f, mid, b, right, 0.5 * tol, depth - 1, out);
}

}  // namespace detail

/// Adaptive composite Gauss-Legendre on [a, b]: an interval is accepted when
/// the rule applied to its two halves agrees with the rule on the whole to
/// within its share of abs_tol (bisection halves the share).
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol, int max_depth = 40) {
    const auto& rule = default_rule();
    QuadratureResult out;
    if (a == b) return out;
    const double whole = rule.integrate(f, a, b);
    detail::adapt(rule, f, a, b, whole, abs_tol, max_depth, out);
    return out;
}

}  // namespace besselkit
