#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "besselkit/precision.hpp"

namespace besselkit {

/// Dense real polynomial c_0 + c_1 x + ... + c_s x^s.
///
/// Trailing coefficients that are exactly zero are trimmed on construction, so
/// equal polynomials share one representation. Trimming never looks at
/// magnitudes: a coefficient of 1e-300 is kept and counts toward the degree.
/// The zero polynomial is stored as {0} and reports degree 0.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs);
    Polynomial(std::initializer_list<double> coeffs);

    static Polynomial constant(double c) { return Polynomial({c}); }
    /// c * x^power.
    static Polynomial monomial(int power, double c = 1.0);

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
    [[nodiscard]] std::span<const double> coeffs() const { return coeffs_; }
    /// Coefficient of x^r; zero beyond the degree.
    [[nodiscard]] double coeff(int r) const;

    /// Horner evaluation. Accumulation::extended runs the compensated Horner
    /// scheme, which behaves as if evaluated in twice the working precision.
    [[nodiscard]] double evaluate(double x, Accumulation mode = Accumulation::standard) const;
    double operator()(double x) const { return evaluate(x); }

    [[nodiscard]] Polynomial scaled(double factor) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void canonicalize();
    std::vector<double> coeffs_;
};

/// alpha*a + beta*b.
Polynomial add_scaled(const Polynomial& a, const Polynomial& b, double alpha, double beta);

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add_scaled(a, b, 1.0, 1.0); }
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return add_scaled(a, b, 1.0, -1.0); }
inline Polynomial operator*(double s, const Polynomial& p) { return p.scaled(s); }

/// {"coeffs":[c0,c1,...]}
std::string to_json(const Polynomial& p);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
Polynomial polynomial_from_json(std::string_view text);

}  // namespace besselkit
