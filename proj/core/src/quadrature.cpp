#include "besselkit/quadrature.hpp"

#include <numbers>
#include <stdexcept>

namespace besselkit {

GaussLegendreRule::GaussLegendreRule(int n) : nodes_(static_cast<std::size_t>(n)), weights_(static_cast<std::size_t>(n)) {
    if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
    // Newton iteration on P_n from the Chebyshev-like initial guess; the
    // nodes are symmetric so only half of them are computed.
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        nodes_[lo] = -z;
        nodes_[hi] = z;
        weights_[lo] = weights_[hi] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
}

const GaussLegendreRule& default_rule() {
    static const GaussLegendreRule rule(12);
    return rule;
}

}  // namespace besselkit
