#pragma once

#include <cmath>
#include <optional>
#include <string_view>

namespace besselkit {

/// Accumulation mode used when summing long alternating sequences.
enum class Accumulation {
    standard,  ///< plain double arithmetic
    extended,  ///< double-double (about 32 significant digits)
};

/// Parses "double" / "extended" (the values accepted by BESSELKIT_PRECISION).
std::optional<Accumulation> parse_accumulation(std::string_view text);

/// Reads BESSELKIT_PRECISION; unset means standard. Throws std::invalid_argument
/// on an unrecognized value.
Accumulation accumulation_from_environment();

// Error-free transformations. two_prod relies on a correctly rounded fma.
inline double two_sum(double a, double b, double& err) {
    const double s = a + b;
    const double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

inline double quick_two_sum(double a, double b, double& err) {
    const double s = a + b;
    err = b - (s - a);
    return s;
}

inline double two_prod(double a, double b, double& err) {
    const double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DoubleDouble() = default;
    constexpr DoubleDouble(double h) : hi(h) {}  // NOLINT(google-explicit-constructor)
    constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

    [[nodiscard]] constexpr double value() const { return hi + lo; }

    friend DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
        double e1 = 0.0;
        double e2 = 0.0;
        double s = two_sum(a.hi, b.hi, e1);
        const double t = two_sum(a.lo, b.lo, e2);
        e1 += t;
        s = quick_two_sum(s, e1, e1);
        e1 += e2;
        s = quick_two_sum(s, e1, e1);
        return {s, e1};
    }

    friend DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }
    friend DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

    friend DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
        double err = 0.0;
        const double p = two_prod(a.hi, b.hi, err);
        err += a.hi * b.lo + a.lo * b.hi;
        double lo = 0.0;
        const double hi = quick_two_sum(p, err, lo);
        return {hi, lo};
    }

    friend DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
        // Long division: one correction step on top of the double quotient.
        const double q1 = a.hi / b.hi;
        DoubleDouble r = a - b * DoubleDouble(q1);
        const double q2 = r.hi / b.hi;
        r = r - b * DoubleDouble(q2);
        const double q3 = r.hi / b.hi;
        double lo = 0.0;
        const double hi = quick_two_sum(q1, q2, lo);
        return DoubleDouble(hi, lo) + DoubleDouble(q3);
    }

    DoubleDouble& operator+=(DoubleDouble o) { return *this = *this + o; }
    DoubleDouble& operator-=(DoubleDouble o) { return *this = *this - o; }
    DoubleDouble& operator*=(DoubleDouble o) { return *this = *this * o; }
    DoubleDouble& operator/=(DoubleDouble o) { return *this = *this / o; }
};

inline DoubleDouble abs(DoubleDouble a) { return a.hi < 0.0 ? -a : a; }

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    CompensatedSum& operator+=(double v) {
        add(v);
        return *this;
    }
    [[nodiscard]] double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace besselkit
