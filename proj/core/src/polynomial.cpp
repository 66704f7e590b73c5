#include "besselkit/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace besselkit {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { canonicalize(); }

Polynomial Polynomial::monomial(int power, double c) {
    if (power < 0) throw std::invalid_argument("monomial power must be non-negative");
    std::vector<double> cs(static_cast<std::size_t>(power) + 1, 0.0);
    cs.back() = c;
    return Polynomial(std::move(cs));
}

void Polynomial::canonicalize() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    // -0.0 and 0.0 compare equal but print differently; keep one spelling.
    for (double& c : coeffs_) {
        if (c == 0.0) c = 0.0;
    }
}

double Polynomial::coeff(int r) const {
    if (r < 0 || r > degree()) return 0.0;
    return coeffs_[static_cast<std::size_t>(r)];
}

double Polynomial::evaluate(double x, Accumulation mode) const {
    if (mode == Accumulation::standard) {
        double s = coeffs_.back();
        for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) s = s * x + *it;
        return s;
    }
    // Compensated Horner (Graillat, Langlois, Louvet).
    double s = coeffs_.back();
    double carry = 0.0;
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        double perr = 0.0;
        double serr = 0.0;
        const double p = two_prod(s, x, perr);
        s = two_sum(p, *it, serr);
        carry = carry * x + (perr + serr);
    }
    return s + carry;
}

Polynomial Polynomial::scaled(double factor) const {
    std::vector<double> cs(coeffs_);
    for (double& c : cs) c *= factor;
    return Polynomial(std::move(cs));
}

Polynomial add_scaled(const Polynomial& a, const Polynomial& b, double alpha, double beta) {
    const int deg = std::max(a.degree(), b.degree());
    std::vector<double> cs(static_cast<std::size_t>(deg) + 1);
    for (int r = 0; r <= deg; ++r) cs[static_cast<std::size_t>(r)] = alpha * a.coeff(r) + beta * b.coeff(r);
    return Polynomial(std::move(cs));
}

std::string to_json(const Polynomial& p) {
    nlohmann::json j;
    j["coeffs"] = std::vector<double>(p.coeffs().begin(), p.coeffs().end());
    return j.dump();
}

Polynomial polynomial_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty()) {
        throw std::invalid_argument("polynomial JSON must be an object with a non-empty \"coeffs\" array");
    }
    std::vector<double> cs;
    cs.reserve(j["coeffs"].size());
    for (const auto& c : j["coeffs"]) {
        if (!c.is_number()) throw std::invalid_argument("polynomial JSON coefficients must be numbers");
        cs.push_back(c.get<double>());
    }
    return Polynomial(std::move(cs));
}

}  // namespace besselkit
