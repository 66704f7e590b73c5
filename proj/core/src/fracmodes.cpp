#include "besselkit/fracmodes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "besselkit/mittag_leffler.hpp"
#include "besselkit/precision.hpp"

namespace besselkit {
namespace {

std::vector<InIterate> mode_table(const OperatorContext& ctx) {
    // Deep iterates may underflow for some orders; shrink until the table fits.
    for (int cap = FracSolver::kModeCap; cap > 0; cap -= 10) {
        try {
            return iterate_In_sequence(ctx, cap);
        } catch (const std::range_error&) {
        }
    }
    return iterate_In_sequence(ctx, 1);
}

bool is_integer(double x) { return x == std::nearbyint(x); }

}  // namespace

double FracProblem::rho(double t) const { return R * R / (K * std::pow(t, gamma)); }

void FracProblem::validate() const {
    std::ostringstream msg;
    if (!(gamma > 0.0 && gamma <= 2.0)) {
        msg << "gamma must lie in (0, 2], got " << gamma;
    } else if (!(K > 0.0) || !std::isfinite(K)) {
        msg << "K must be positive, got " << K;
    } else if (!(R > 0.0) || !std::isfinite(R)) {
        msg << "R must be positive, got " << R;
    } else if (d < 1) {
        msg << "dimension d must be >= 1, got " << d;
    } else if (!std::isfinite(c0)) {
        msg << "c0 must be finite";
    } else {
        return;
    }
    throw std::domain_error(msg.str());
}

FracSolver::FracSolver(const FracProblem& problem)
    : problem_((problem.validate(), problem)), ctx_(problem.eta()), in_(mode_table(ctx_)) {}

void FracSolver::require_radius(double r) const {
    if (!(r >= 0.0 && r <= problem_.R)) {
        std::ostringstream msg;
        msg << "radius must lie in [0, R=" << problem_.R << "], got " << r;
        throw std::domain_error(msg.str());
    }
}

void FracSolver::require_asymptotic(double t) const {
    if (is_integer(problem_.gamma)) {
        throw std::domain_error("long-time mode expansion is degenerate for integer gamma (poles of Gamma(1 - m gamma))");
    }
    if (!(t > 0.0)) throw std::domain_error("time must be positive");
    const double rho = problem_.rho(t);
    if (!(rho < 1.0)) {
        std::ostringstream msg;
        msg << "t=" << t << " is too early for the long-time expansion: R^2/(K t^gamma) = " << rho
            << " must be < 1";
        throw std::domain_error(msg.str());
    }
}

SeriesSolution FracSolver::series(double r, double t, int modes, double tail_tol) const {
    require_radius(r);
    if (!(t > 0.0)) throw std::domain_error("time must be positive");
    if (modes < 1) throw std::invalid_argument("number of modes must be >= 1");
    SeriesSolution out;
    const OrderContext& order = ctx_.order();
    const double eta = order.order();
    const double x = r / problem_.R;
    const double time_factor = problem_.K * std::pow(t, problem_.gamma) / (problem_.R * problem_.R);
    const double norm = std::pow(2.0, eta) * order.gamma_p1();
    CompensatedSum sum;
    double last = 0.0;
    for (int j = 1; j <= modes; ++j) {
        const double zj = order.zero(j);
        // (r/R)^{-eta} J_eta(z_j x) = z_j^eta S(z_j x) / (2^eta Gamma(eta+1)).
        const double radial = std::pow(zj, eta) * jtilde_unit(order, zj * x) / norm;
        const double weight = 2.0 / (zj * bessel_j(eta + 1.0, zj));
        const double decay = mittag_leffler(problem_.gamma, zj * zj * time_factor);
        const double term = weight * radial * decay;
        sum += term;
        // Amplitude at the centre, where |Jtilde| peaks; the term at x itself
        // can sit on a node of the mode.
        last = weight * std::pow(zj, eta) / norm * decay;
    }
    out.value = (x == 1.0) ? 0.0 : sum.value();
    out.tail_estimate = std::abs(last);
    out.tail_warning = out.tail_estimate > tail_tol;
    return out;
}

ModeExpansion FracSolver::expansion(double rho, int max_terms) const {
    if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("expansion parameter rho must lie in (0, 1)");
    if (is_integer(problem_.gamma)) {
        throw std::domain_error("long-time mode expansion is degenerate for integer gamma (poles of Gamma(1 - m gamma))");
    }
    const double gamma = problem_.gamma;
    const double zp2 = ctx_.zp2();
    const int limit = max_terms > 0 ? max_terms : std::numeric_limits<int>::max();
    ModeExpansion out;

    // |prefactor_m| rho^m, with I_m(0) -> zeta past the end of the table.
    auto magnitude = [&](int m, double& prefactor) {
        const double md = static_cast<double>(m);
        const double i0 = m < static_cast<int>(in_.size()) ? in_[static_cast<std::size_t>(m)].value_at_zero : ctx_.zeta();
        const double sign = (m % 2 == 1) ? 1.0 : -1.0;
        prefactor = sign * i0 * reciprocal_gamma(1.0 - md * gamma) / std::pow(zp2, md);
        return std::abs(prefactor) * std::pow(rho, md);
    };

    double prev = std::numeric_limits<double>::infinity();
    double first = 0.0;
    for (int m = 1;; ++m) {
        double prefactor = 0.0;
        const double mag = magnitude(m, prefactor);
        if (prefactor == 0.0) {
            if (m > mode_table_size() + 8) break;
            continue;
        }
        const bool growing = mag > prev;
        const bool negligible = first > 0.0 && mag <= 1e-17 * first;
        const bool enough = static_cast<int>(out.terms.size()) >= limit;
        if (growing || negligible || enough || m > mode_table_size()) {
            out.first_omitted = mag;
            break;
        }
        if (first == 0.0) first = mag;
        out.terms.push_back({m, prefactor, in_[static_cast<std::size_t>(m)].normalized});
        out.truncation_m = m;
        prev = mag;
    }
    return out;
}

AsymptoticSolution FracSolver::asymptotic(double r, double t, int max_terms) const {
    require_radius(r);
    require_asymptotic(t);
    const double rho = problem_.rho(t);
    const ModeExpansion ex = expansion(rho, max_terms);
    AsymptoticSolution out;
    out.est_error = ex.first_omitted;
    out.terms_used = static_cast<int>(ex.terms.size());
    const double x = r / problem_.R;
    if (x == 1.0) return out;
    CompensatedSum sum;
    for (const ModeTerm& term : ex.terms) {
        sum += term.prefactor * std::pow(rho, static_cast<double>(term.m)) * term.mode.evaluate(x, Accumulation::extended);
    }
    out.value = sum.value();
    return out;
}

SeriesSolution solve_series(const FracProblem& problem, double r, double t, int modes) {
    return FracSolver(problem).series(r, t, modes);
}

AsymptoticSolution solve_asymptotic(const FracProblem& problem, double r, double t, int max_terms) {
    return FracSolver(problem).asymptotic(r, t, max_terms);
}

double ml_derivative_identity_check(double gamma, double omega, std::span<const double> t_grid, int terms) {
    if (!(gamma > 0.0 && gamma <= 2.0)) throw std::domain_error("gamma must lie in (0, 2]");
    if (!(omega > 0.0)) throw std::domain_error("omega must be positive");
    if (terms < 2) throw std::invalid_argument("identity check needs at least two terms");
    const double lambda = std::pow(omega, gamma);

    // A_m = (-lambda)^m / Gamma(gamma m + 1).
    std::vector<double> a(static_cast<std::size_t>(terms));
    for (int m = 0; m < terms; ++m) {
        a[static_cast<std::size_t>(m)] = std::pow(-lambda, m) / std::tgamma(gamma * m + 1.0);
    }
    // Derivative coefficient of t^{gamma(m-1)}: A_m Gamma(gamma m + 1) / Gamma(gamma m + 1 - gamma).
    std::vector<double> lhs(static_cast<std::size_t>(terms) - 1);
    double residual = 0.0;
    for (int m = 1; m < terms; ++m) {
        const double md = static_cast<double>(m);
        const double d = a[static_cast<std::size_t>(m)] * std::tgamma(gamma * md + 1.0) / std::tgamma(gamma * md + 1.0 - gamma);
        const double rhs = -lambda * a[static_cast<std::size_t>(m) - 1];
        lhs[static_cast<std::size_t>(m) - 1] = d;
        residual = std::max(residual, std::abs(d - rhs) / std::abs(rhs));
    }
    for (double t : t_grid) {
        CompensatedSum left;
        CompensatedSum right;
        double scale = 0.0;
        for (int m = 0; m + 1 < terms; ++m) {
            const double power = std::pow(t, gamma * m);
            left += lhs[static_cast<std::size_t>(m)] * power;
            right += -lambda * a[static_cast<std::size_t>(m)] * power;
            scale += std::abs(lambda * a[static_cast<std::size_t>(m)] * power);
        }
        if (scale > 0.0) residual = std::max(residual, std::abs(left.value() - right.value()) / scale);
    }
    return residual;
}

}  // namespace besselkit
