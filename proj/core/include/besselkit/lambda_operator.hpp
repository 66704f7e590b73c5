#pragma once

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "besselkit/bessel.hpp"
#include "besselkit/polynomial.hpp"

namespace besselkit {

/// Thrown when Lambda[f](0) == 0, i.e. f cannot be normalized by the operator.
class NormalizationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Constants of the integral operator
///
///     Lambda_p[f](x) = z_p^2 \int_x^1 u^{-2p-1} \int_0^u v^{2p+1} f(v) dv du
///
/// for one order p: z_p = z_{p,1}, its square, the attractor prefactor zeta_p
/// and the monomial gains a_r = z_p^2 / ((2+r)(2+2p+r)).
class OperatorContext {
public:
    /// Throws std::domain_error unless p > -1.
    explicit OperatorContext(double p);
    explicit OperatorContext(OrderContext order);

    [[nodiscard]] const OrderContext& order() const { return order_; }
    [[nodiscard]] double p() const { return order_.order(); }
    [[nodiscard]] double zp() const { return zp_; }
    [[nodiscard]] double zp2() const { return zp2_; }
    /// zeta_p = z_p^{p-1} / (2^{p-1} Gamma(p+1) J_{p+1}(z_p)); Lambda^m[1] -> zeta_p * Jtilde_p.
    [[nodiscard]] double zeta() const { return zeta_; }
    /// Lambda_p[x^r] = a_r (1 - x^{r+2}).
    [[nodiscard]] double a(int r) const;

private:
    OrderContext order_;
    double zp_;
    double zp2_;
    double zeta_;
};

/// a_r - a_r x^{r+2}. Throws std::invalid_argument for r < 0.
Polynomial apply_lambda_monomial(const OperatorContext& ctx, int r);

/// Lambda_p[f], assembled coefficient by coefficient from the monomial rule.
Polynomial apply_lambda(const OperatorContext& ctx, const Polynomial& f);

/// Lambda_p[f] / Lambda_p[f](0). The constant coefficient of the result is
/// exactly 1. Throws NormalizationError when Lambda_p[f](0) == 0.
Polynomial apply_lambda_hat(const OperatorContext& ctx, const Polynomial& f);

/// b_k(r,p) = prod_{m=0}^{k-1} a_{r+2m}, by running product.
double coeff_b(const OperatorContext& ctx, int k, int r);

/// One step of the I_n recursion kept in normalized form: Ba_n = I_n / I_n(0)
/// and the raw scalar I_n(0) = Lambda^n[1](0).
struct InIterate {
    Polynomial normalized;
    double value_at_zero = 1.0;

    [[nodiscard]] Polynomial raw() const { return normalized.scaled(value_at_zero); }
};

/// Ba_0 .. Ba_n together with I_0(0) .. I_n(0), from
/// I_n = sum_{k=1}^n (-1)^{k-1} b_k(0,p) I_{n-k} + (-1)^n b_n(0,p) x^{2n}.
/// Throws std::range_error once the leading coefficient underflows double range.
std::vector<InIterate> iterate_In_sequence(const OperatorContext& ctx, int n);
InIterate iterate_In(const OperatorContext& ctx, int n);

/// Lambda^n_p[seed] from the closed form in terms of I_0 .. I_{n-1}:
///   sum_{k=1}^n (-1)^{k-1} I_{n-k}(x) sum_r c_r b_k(r,p) + (-1)^n x^{2n} sum_r c_r b_n(r,p) x^r.
Polynomial lambda_power_poly(const OperatorContext& ctx, int n, const Polynomial& seed);

enum class Family {
    Ba,          ///< seed f_0 = 1
    Be,          ///< seed f_0 = 1 - x
    CustomSeed,  ///< user-supplied polynomial seed
};

std::string_view family_name(Family family);

/// Iterates f_0 = seed, f_n = normalized Lambda applied n times, for one order p.
class FamilyState {
public:
    FamilyState(OperatorContext ctx, Family family, Polynomial seed, std::vector<Polynomial> iterates,
                std::vector<double> raw_at_zero);

    [[nodiscard]] Family family() const { return family_; }
    [[nodiscard]] double p() const { return ctx_.p(); }
    [[nodiscard]] const OperatorContext& context() const { return ctx_; }
    [[nodiscard]] const Polynomial& seed() const { return seed_; }
    [[nodiscard]] int n_max() const { return static_cast<int>(iterates_.size()) - 1; }
    /// f_n for 0 <= n <= n_max(); throws std::out_of_range otherwise.
    [[nodiscard]] const Polynomial& iterate(int n) const;
    [[nodiscard]] std::span<const Polynomial> iterates() const { return iterates_; }
    /// Lambda^n[seed](0) without normalization (I_n(0) for the Ba family).
    [[nodiscard]] double raw_value_at_zero(int n) const;

private:
    OperatorContext ctx_;
    Family family_;
    Polynomial seed_;
    std::vector<Polynomial> iterates_;
    std::vector<double> raw_at_zero_;
};

/// Ba or Be family up to n_max. Throws std::invalid_argument for CustomSeed.
FamilyState family_generate(Family family, double p, int n_max);
FamilyState family_generate(const OperatorContext& ctx, Family family, int n_max);
/// Custom seed; propagates NormalizationError from the first degenerate step.
FamilyState family_generate(const OperatorContext& ctx, const Polynomial& seed, int n_max);

/// max over grid of |f_n(x) - Jtilde_p(x)|.
double attractor_error(const FamilyState& state, int n, std::span<const double> grid);

}  // namespace besselkit
