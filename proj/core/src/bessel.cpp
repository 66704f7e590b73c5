#include "besselkit/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "besselkit/precision.hpp"

namespace besselkit {
namespace {

constexpr double kPi = std::numbers::pi;

// Below this argument the power series summed in doubles keeps ~1e-14
// absolute accuracy; above it the terms are carried in double-double.
constexpr double kDoubleSeriesLimit = 4.0;
// Hankel's expansion is attempted from here on.
constexpr double kHankelStart = 40.0;
// The double-double series loses 1e-12 relative accuracy past this point.
constexpr double kSeriesAccurateLimit = 50.0;

bool is_integer(double v) { return std::isfinite(v) && v == std::nearbyint(v); }

// Sum_{k>=0} (-1)^k Gamma(p+1) / (k! Gamma(k+p+1)) (y/2)^{2k}
double series_double(double p, double y) {
    const double q = 0.25 * y * y;
    double term = 1.0;
    CompensatedSum sum;
    sum += term;
    for (int k = 1; k < 2000; ++k) {
        term *= -q / (static_cast<double>(k) * (static_cast<double>(k) + p));
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum.value()) || std::abs(term) < 1e-300) break;
    }
    return sum.value();
}

double series_extended(double p, double y) {
    const DoubleDouble half_y = DoubleDouble(y) * DoubleDouble(0.5);
    const DoubleDouble q = half_y * half_y;
    DoubleDouble term(1.0);
    DoubleDouble sum(1.0);
    for (int k = 1; k < 2000; ++k) {
        const double kd = static_cast<double>(k);
        double err = 0.0;
        const double kp = two_sum(kd, p, err);
        const DoubleDouble denom = DoubleDouble(kd) * DoubleDouble(kp, err);
        term = -(term * q) / denom;
        sum += term;
        const double t = std::abs(term.hi);
        if ((kd > 0.5 * y && t <= 1e-34 * std::abs(sum.hi)) || t < 1e-300) break;
    }
    return sum.value();
}

double series_unit(double p, double y) {
    y = std::abs(y);
    return y < kDoubleSeriesLimit ? series_double(p, y) : series_extended(p, y);
}

// Hankel's large-argument expansion of J_p(x), x > 0. Returns false when the
// smallest term of the asymptotic series is not below double precision.
bool hankel(double p, double x, double& out) {
    const double mu = 4.0 * p * p;
    const double turn = 0.5 * (std::sqrt(mu) + 1.0);
    double term = 1.0;
    double peak = 1.0;
    double big_p = 1.0;
    double big_q = 0.0;
    bool converged = false;
    for (int k = 1; k < 400; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = term * (mu - odd * odd) / (static_cast<double>(k) * 8.0 * x);
        if (k > turn && std::abs(next) > std::abs(term)) break;
        term = next;
        peak = std::max(peak, std::abs(term));
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            big_p += sign * term;
        } else {
            big_q += sign * term;
        }
        if (std::abs(term) < 1e-17) {
            converged = true;
            break;
        }
    }
    // Terms that grow before they shrink cancel; past ~1e3 the sum is noise.
    if (!converged || peak > 1e3) return false;
    const double phase = (0.5 * p + 0.25) * kPi;
    const double cp = std::cos(phase);
    const double sp = std::sin(phase);
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    const double cos_chi = cx * cp + sx * sp;
    const double sin_chi = sx * cp - cx * sp;
    out = std::sqrt(2.0 / (kPi * x)) * (big_p * cos_chi - big_q * sin_chi);
    return true;
}

// J_p(x) for p > -1, x > 0.
BesselValue jp_positive(double p, double gamma_p1, double x) {
    if (x >= kHankelStart) {
        double v = 0.0;
        if (hankel(p, x, v)) return {v, false};
    }
    const double s = series_unit(p, x);
    return {std::pow(0.5 * x, p) / gamma_p1 * s, x > kSeriesAccurateLimit};
}

double unit_positive(double p, double gamma_p1, double y) {
    y = std::abs(y);
    if (y >= kHankelStart) {
        double v = 0.0;
        if (hankel(p, y, v)) return gamma_p1 * std::pow(2.0 / y, p) * v;
    }
    return series_unit(p, y);
}

BesselValue jp_impl(double p, double gamma_p1, double x) {
    if (x == 0.0) {
        if (p == 0.0) return {1.0, false};
        return {p > 0.0 ? 0.0 : std::numeric_limits<double>::infinity(), false};
    }
    if (x > 0.0) return jp_positive(p, gamma_p1, x);
    if (!is_integer(p)) {
        std::ostringstream msg;
        msg << "J_p(x) with non-integer order p=" << p << " is undefined for x=" << x << " < 0";
        throw std::domain_error(msg.str());
    }
    BesselValue v = jp_positive(p, gamma_p1, -x);
    if (static_cast<long long>(p) % 2 != 0) v.value = -v.value;
    return v;
}

void require_order(double p) {
    if (!(p > -1.0) || !std::isfinite(p)) {
        std::ostringstream msg;
        msg << "Bessel order must satisfy p > -1, got " << p;
        throw std::domain_error(msg.str());
    }
}

}  // namespace

OrderContext::OrderContext(double p)
    : p_(p), gamma_p1_(0.0), cache_(std::make_shared<ZeroCache>()) {
    require_order(p);
    gamma_p1_ = std::tgamma(p + 1.0);
}

int OrderContext::cached_zero_count() const {
    std::lock_guard lock(cache_->mu);
    return static_cast<int>(cache_->zeros.size());
}

std::vector<double> OrderContext::zeros(int count) const {
    if (count <= 0) return {};
    (void)zero(count);
    std::lock_guard lock(cache_->mu);
    return {cache_->zeros.begin(), cache_->zeros.begin() + count};
}

double OrderContext::zero(int k) const {
    if (k < 1) throw std::invalid_argument("zero index k must be >= 1");
    std::lock_guard lock(cache_->mu);
    auto& zs = cache_->zeros;
    const double p = p_;
    const double g = gamma_p1_;
    auto probe = [&](double x) { return unit_positive(p, g, x); };
    auto jval = [&](double x) { return jp_positive(p, g, x).value; };

    while (static_cast<int>(zs.size()) < k) {
        // Zeros are at least ~2.4 apart, so a pi/4 scan cannot step over two.
        double lo = zs.empty() ? std::max(p, 0.0) : zs.back() + kPi / 8.0;
        double f_lo = probe(lo);
        const double step = kPi / 4.0;
        double hi = lo;
        double f_hi = f_lo;
        int steps = 0;
        for (;;) {
            hi = lo + step;
            f_hi = probe(hi);
            if (f_hi == 0.0 || std::signbit(f_hi) != std::signbit(f_lo)) break;
            lo = hi;
            f_lo = f_hi;
            if (++steps > 100000) {
                throw ConvergenceError("zero scan found no sign change", lo, hi);
            }
        }
        if (f_hi == 0.0) {
            zs.push_back(hi);
            continue;
        }
        // Bisection down to a narrow bracket, then guarded Newton on J_p.
        for (int it = 0; it < 200 && (hi - lo) > 1e-9 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = probe(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if (std::signbit(fm) == std::signbit(f_lo)) {
                lo = mid;
                f_lo = fm;
            } else {
                hi = mid;
            }
        }
        double x = 0.5 * (lo + hi);
        bool done = (lo == hi);
        for (int it = 0; it < 60 && !done; ++it) {
            const double f = jval(x);
            if (f == 0.0) {
                done = true;
                break;
            }
            const double df = (p / x) * f - jp_positive(p + 1.0, g * (p + 1.0), x).value;
            if (std::signbit(f) == std::signbit(f_lo)) {
                lo = x;
            } else {
                hi = x;
            }
            double next = x - f / df;
            if (!(next >= lo && next <= hi)) next = 0.5 * (lo + hi);
            done = std::abs(next - x) <= 2e-16 * x;
            x = next;
        }
        if (!done && std::abs(hi - lo) > 1e-13 * x) {
            std::ostringstream msg;
            msg << "Newton refinement of z_{" << p << "," << zs.size() + 1 << "} did not converge";
            throw ConvergenceError(msg.str(), lo, hi);
        }
        zs.push_back(x);
    }
    return zs[static_cast<std::size_t>(k) - 1];
}

BesselValue eval_jp(const OrderContext& ctx, double x) { return jp_impl(ctx.order(), ctx.gamma_p1(), x); }

double bessel_j(double p, double x) {
    if (p <= -1.0) return negate_order(p, x);
    require_order(p);
    return jp_impl(p, std::tgamma(p + 1.0), x).value;
}

double bessel_j_derivative(double p, double x) {
    if (x == 0.0) {
        if (p == 1.0) return 0.5;
        if (p == 0.0 || p > 1.0) return 0.0;
        if (p == -1.0) return -0.5;
        return p > 0.0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    }
    return (p / x) * bessel_j(p, x) - bessel_j(p + 1.0, x);
}

double jtilde_unit(const OrderContext& ctx, double y) { return unit_positive(ctx.order(), ctx.gamma_p1(), y); }

double eval_jtilde(const OrderContext& ctx, int n, double x) {
    if (x == 0.0) return 1.0;
    return unit_positive(ctx.order(), ctx.gamma_p1(), ctx.zero(n) * x);
}

double find_zero(const OrderContext& ctx, int k) { return ctx.zero(k); }

double negate_order(double p, double x) {
    if (!is_integer(p) || p >= 0.0) {
        std::ostringstream msg;
        msg << "negate_order needs a negative integer order, got " << p;
        throw std::domain_error(msg.str());
    }
    const double m = -p;
    const double v = jp_impl(m, std::tgamma(m + 1.0), x).value;
    return static_cast<long long>(m) % 2 == 0 ? v : -v;
}

}  // namespace besselkit
