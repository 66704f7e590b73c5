#include "besselkit/lambda_operator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "besselkit/precision.hpp"

namespace besselkit {
namespace {

Polynomial normalize_at_zero(const Polynomial& g) {
    const double c0 = g.coeff(0);
    if (c0 == 0.0) {
        throw NormalizationError("Lambda[f](0) = 0: the seed cannot be normalized by the operator");
    }
    std::vector<double> cs(g.coeffs().begin(), g.coeffs().end());
    for (double& c : cs) c /= c0;
    return Polynomial(std::move(cs));
}

// table[k][r] = b_k(r,p) for 1 <= k <= n, 0 <= r <= s; row 0 is all ones.
std::vector<std::vector<double>> b_table(const OperatorContext& ctx, int n, int s) {
    std::vector<std::vector<double>> table(static_cast<std::size_t>(n) + 1,
                                           std::vector<double>(static_cast<std::size_t>(s) + 1, 1.0));
    for (int k = 1; k <= n; ++k) {
        for (int r = 0; r <= s; ++r) {
            table[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] =
                table[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(r)] * ctx.a(r + 2 * (k - 1));
        }
    }
    return table;
}

}  // namespace

OperatorContext::OperatorContext(double p) : OperatorContext(OrderContext(p)) {}

OperatorContext::OperatorContext(OrderContext order) : order_(std::move(order)) {
    const double p = order_.order();
    zp_ = order_.zero(1);
    zp2_ = zp_ * zp_;
    const double j_next = bessel_j(p + 1.0, zp_);
    zeta_ = std::pow(zp_, p - 1.0) / (std::pow(2.0, p - 1.0) * order_.gamma_p1() * j_next);
}

double OperatorContext::a(int r) const {
    const double rd = static_cast<double>(r);
    return zp2_ / ((2.0 + rd) * (2.0 + 2.0 * p() + rd));
}

Polynomial apply_lambda_monomial(const OperatorContext& ctx, int r) {
    if (r < 0) throw std::invalid_argument("monomial power r must be >= 0");
    const double ar = ctx.a(r);
    std::vector<double> cs(static_cast<std::size_t>(r) + 3, 0.0);
    cs.front() = ar;
    cs.back() = -ar;
    return Polynomial(std::move(cs));
}

Polynomial apply_lambda(const OperatorContext& ctx, const Polynomial& f) {
    const int s = f.degree();
    std::vector<double> cs(static_cast<std::size_t>(s) + 3, 0.0);
    CompensatedSum constant;
    for (int r = 0; r <= s; ++r) {
        const double term = f.coeff(r) * ctx.a(r);
        constant += term;
        cs[static_cast<std::size_t>(r) + 2] = -term;
    }
    cs[0] = constant.value();
    return Polynomial(std::move(cs));
}

Polynomial apply_lambda_hat(const OperatorContext& ctx, const Polynomial& f) {
    return normalize_at_zero(apply_lambda(ctx, f));
}

double coeff_b(const OperatorContext& ctx, int k, int r) {
    if (k < 1 || r < 0) throw std::invalid_argument("coeff_b needs k >= 1 and r >= 0");
    double prod = 1.0;
    for (int m = 0; m < k; ++m) prod *= ctx.a(r + 2 * m);
    return prod;
}

std::vector<InIterate> iterate_In_sequence(const OperatorContext& ctx, int n) {
    if (n < 0) throw std::invalid_argument("iteration index n must be >= 0");
    std::vector<InIterate> seq;
    seq.reserve(static_cast<std::size_t>(n) + 1);
    seq.push_back({Polynomial::constant(1.0), 1.0});

    std::vector<double> b(static_cast<std::size_t>(n) + 1, 1.0);  // b[k] = b_k(0,p)
    for (int k = 1; k <= n; ++k) b[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k) - 1] * ctx.a(2 * (k - 1));

    for (int m = 1; m <= n; ++m) {
        std::vector<double> cs(2 * static_cast<std::size_t>(m) + 1, 0.0);
        const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
        cs.back() = sign_m * b[static_cast<std::size_t>(m)];
        for (int r = 0; r <= 2 * m - 2; ++r) {
            CompensatedSum acc;
            for (int k = 1; k <= m; ++k) {
                const auto& prev = seq[static_cast<std::size_t>(m - k)];
                const double sign_k = (k % 2 == 1) ? 1.0 : -1.0;
                acc += sign_k * b[static_cast<std::size_t>(k)] * prev.value_at_zero * prev.normalized.coeff(r);
            }
            cs[static_cast<std::size_t>(r)] = acc.value();
        }
        const double lead = cs.back();
        Polynomial raw(std::move(cs));
        const double at_zero = raw.coeff(0);
        Polynomial normalized = normalize_at_zero(raw);
        if (lead == 0.0 || normalized.degree() != 2 * m) {
            std::ostringstream msg;
            msg << "leading coefficient of I_" << m << " underflows double range (p=" << ctx.p() << ")";
            throw std::range_error(msg.str());
        }
        seq.push_back({std::move(normalized), at_zero});
    }
    return seq;
}

InIterate iterate_In(const OperatorContext& ctx, int n) { return iterate_In_sequence(ctx, n).back(); }

Polynomial lambda_power_poly(const OperatorContext& ctx, int n, const Polynomial& seed) {
    if (n < 1) throw std::invalid_argument("lambda_power_poly needs n >= 1");
    const int s = seed.degree();
    const auto b = b_table(ctx, n, s);
    const auto in_seq = iterate_In_sequence(ctx, n - 1);

    std::vector<double> cs(static_cast<std::size_t>(2 * n + s) + 1, 0.0);
    std::vector<CompensatedSum> acc(cs.size());
    for (int k = 1; k <= n; ++k) {
        CompensatedSum weight;
        for (int r = 0; r <= s; ++r) weight += seed.coeff(r) * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
        const double w = ((k % 2 == 1) ? 1.0 : -1.0) * weight.value();
        const InIterate& prev = in_seq[static_cast<std::size_t>(n - k)];
        const Polynomial& ba = prev.normalized;
        for (int j = 0; j <= ba.degree(); ++j) acc[static_cast<std::size_t>(j)] += w * prev.value_at_zero * ba.coeff(j);
    }
    const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
    for (int r = 0; r <= s; ++r) {
        acc[static_cast<std::size_t>(2 * n + r)] += sign_n * seed.coeff(r) * b[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
    }
    for (std::size_t j = 0; j < cs.size(); ++j) cs[j] = acc[j].value();
    return Polynomial(std::move(cs));
}

std::string_view family_name(Family family) {
    switch (family) {
        case Family::Ba: return "ba";
        case Family::Be: return "be";
        case Family::CustomSeed: return "custom";
    }
    return "unknown";
}

FamilyState::FamilyState(OperatorContext ctx, Family family, Polynomial seed, std::vector<Polynomial> iterates,
                         std::vector<double> raw_at_zero)
    : ctx_(std::move(ctx)),
      family_(family),
      seed_(std::move(seed)),
      iterates_(std::move(iterates)),
      raw_at_zero_(std::move(raw_at_zero)) {}

const Polynomial& FamilyState::iterate(int n) const {
    if (n < 0 || n > n_max()) {
        std::ostringstream msg;
        msg << "iterate index " << n << " outside [0, " << n_max() << "]";
        throw std::out_of_range(msg.str());
    }
    return iterates_[static_cast<std::size_t>(n)];
}

double FamilyState::raw_value_at_zero(int n) const {
    (void)iterate(n);
    return raw_at_zero_[static_cast<std::size_t>(n)];
}

namespace {

FamilyState generate(const OperatorContext& ctx, Family family, const Polynomial& seed, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    std::vector<Polynomial> its{seed};
    std::vector<double> raw{seed.coeff(0)};
    double scale = 1.0;  // Lambda^n[seed] = scale * f_n
    for (int n = 1; n <= n_max; ++n) {
        const Polynomial g = apply_lambda(ctx, its.back());
        its.push_back(normalize_at_zero(g));
        scale *= g.coeff(0);
        raw.push_back(scale);
        if (its.back().degree() != seed.degree() + 2 * n) {
            std::ostringstream msg;
            msg << "leading coefficient of iterate " << n << " underflows double range (p=" << ctx.p() << ")";
            throw std::range_error(msg.str());
        }
    }
    return {ctx, family, seed, std::move(its), std::move(raw)};
}

}  // namespace

FamilyState family_generate(const OperatorContext& ctx, const Polynomial& seed, int n_max) {
    return generate(ctx, Family::CustomSeed, seed, n_max);
}

FamilyState family_generate(const OperatorContext& ctx, Family family, int n_max) {
    switch (family) {
        case Family::Ba: return generate(ctx, family, Polynomial{1.0}, n_max);
        case Family::Be: return generate(ctx, family, Polynomial{1.0, -1.0}, n_max);
        case Family::CustomSeed: break;
    }
    throw std::invalid_argument("family_generate: pass the seed polynomial for a custom family");
}

FamilyState family_generate(Family family, double p, int n_max) {
    return family_generate(OperatorContext(p), family, n_max);
}

double attractor_error(const FamilyState& state, int n, std::span<const double> grid) {
    const Polynomial& f = state.iterate(n);
    const OrderContext& order = state.context().order();
    double worst = 0.0;
    for (double x : grid) worst = std::max(worst, std::abs(f.evaluate(x) - eval_jtilde(order, 1, x)));
    return worst;
}

}  // namespace besselkit
