#pragma once

#include <span>
#include <vector>

#include "besselkit/bessel.hpp"
#include "besselkit/lambda_operator.hpp"
#include "besselkit/polynomial.hpp"

namespace besselkit {

/// Fractional diffusion (0 < gamma < 1), classical diffusion (gamma = 1),
/// diffusion-wave (1 < gamma < 2) and wave (gamma = 2) in a d-dimensional
/// ball of radius R with c(R,t) = 0 and c(r,0) = c0 (plus dc/dt = 0 at t = 0
/// when gamma > 1).
struct FracProblem {
    double gamma = 0.5;
    double K = 1.0;  ///< generalized diffusion coefficient, length^2 / time^gamma
    double R = 1.0;
    int d = 3;
    double c0 = 1.0;

    /// Bessel order eta = d/2 - 1 of the radial modes.
    [[nodiscard]] double eta() const { return 0.5 * static_cast<double>(d) - 1.0; }
    /// R^2 / (K t^gamma): the expansion parameter of the long-time series.
    [[nodiscard]] double rho(double t) const;
    /// Throws std::domain_error for gamma outside (0,2], K <= 0, R <= 0, d < 1 or non-finite c0.
    void validate() const;
};

struct SeriesSolution {
    double value = 0.0;  ///< c(r,t) / c0
    /// Amplitude of the last mode kept; the omitted tail is of this order.
    double tail_estimate = 0.0;
    bool tail_warning = false;
};

struct AsymptoticSolution {
    double value = 0.0;  ///< c(r,t) / c0
    /// Magnitude (space-independent part) of the first omitted term.
    double est_error = 0.0;
    int terms_used = 0;
};

struct ModeTerm {
    int m = 0;
    /// (-1)^{m+1} I_m(0) / (z_eta^{2m} Gamma(1 - m gamma)).
    double prefactor = 0.0;
    /// Ba_m^{(eta)}, the m-th fractional mode.
    Polynomial mode;
};

/// c/c0 ~ sum_m prefactor_m rho^m Ba_m(r/R), cut at truncation_m.
struct ModeExpansion {
    std::vector<ModeTerm> terms;
    int truncation_m = 0;
    /// Size of the first term left out (at the rho the expansion was built for).
    double first_omitted = 0.0;
};

/// Solver bound to one problem. The zeros of J_eta and the I_m sequence are
/// computed on construction or on demand and then shared read-only, so one
/// solver can serve concurrent evaluations.
class FracSolver {
public:
    /// Largest mode index of the long-time expansion kept in the table.
    static constexpr int kModeCap = 80;

    explicit FracSolver(const FracProblem& problem);

    [[nodiscard]] const FracProblem& problem() const { return problem_; }
    [[nodiscard]] const OperatorContext& context() const { return ctx_; }
    [[nodiscard]] int mode_table_size() const { return static_cast<int>(in_.size()) - 1; }

    /// Fourier-Bessel series with `modes` terms:
    ///   2 (r/R)^{-eta} sum_j J_eta(z_j r/R) / (z_j J_{eta+1}(z_j)) E_gamma[-(z_j/R)^2 K t^gamma].
    /// Returns exactly 0 at r = R. tail_warning is set when tail_estimate
    /// exceeds tail_tol. Throws std::domain_error for r outside [0,R] or t <= 0,
    /// std::invalid_argument for modes < 1.
    [[nodiscard]] SeriesSolution series(double r, double t, int modes, double tail_tol = 1e-8) const;

    /// Long-time expansion in the fractional modes, cut at the smallest term
    /// or after max_terms terms, whichever comes first (max_terms <= 0 means
    /// no user limit). Returns exactly 0 at r = R.
    /// Throws std::domain_error for integer gamma, for rho(t) >= 1 and for r
    /// outside [0,R].
    [[nodiscard]] AsymptoticSolution asymptotic(double r, double t, int max_terms = 0) const;

    /// The truncated expansion itself for a given rho in (0,1).
    [[nodiscard]] ModeExpansion expansion(double rho, int max_terms = 0) const;

private:
    void require_radius(double r) const;
    void require_asymptotic(double t) const;

    FracProblem problem_;
    OperatorContext ctx_;
    std::vector<InIterate> in_;
};

SeriesSolution solve_series(const FracProblem& problem, double r, double t, int modes);
AsymptoticSolution solve_asymptotic(const FracProblem& problem, double r, double t, int max_terms = 0);

/// Termwise check of D^gamma E_gamma[-omega^gamma t^gamma] = -omega^gamma E_gamma[-omega^gamma t^gamma]
/// (Caputo derivative) on the first `terms` power-series coefficients.
///
/// The derivative maps t^{gamma m} to Gamma(gamma m + 1)/Gamma(gamma(m-1) + 1) t^{gamma(m-1)};
/// the returned residual is the larger of the worst relative coefficient
/// mismatch and the worst relative mismatch of the two truncated sums on t_grid.
/// Throws std::domain_error unless 0 < gamma <= 2 and omega > 0.
double ml_derivative_identity_check(double gamma, double omega, std::span<const double> t_grid, int terms = 20);

}  // namespace besselkit
