#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <ostream>

#include "basis4/gaussian.hpp"
#include "basis4/rational.hpp"

namespace basis4 {

inline constexpr double kDefaultEps = 1e-12;

/// Double-precision scalar with an explicit comparison tolerance. The
/// tolerance is carried by the value, never implicit; arithmetic
/// propagates the larger of the operands' tolerances. Two values are
/// equal when both components differ by at most the tolerance.
struct FloatScalar {
    double re = 0.0;
    double im = 0.0;
    double eps = kDefaultEps;

    FloatScalar() = default;
    FloatScalar(int n) : re(n) {}  // NOLINT: implicit by design
    FloatScalar(double real, double imag = 0.0, double tolerance = kDefaultEps)
        : re(real), im(imag), eps(tolerance) {}

    std::complex<double> value() const { return {re, im}; }

    FloatScalar operator-() const { return {-re, -im, eps}; }

    friend FloatScalar operator+(const FloatScalar& a, const FloatScalar& b) {
        return {a.re + b.re, a.im + b.im, std::max(a.eps, b.eps)};
    }
    friend FloatScalar operator-(const FloatScalar& a, const FloatScalar& b) {
        return {a.re - b.re, a.im - b.im, std::max(a.eps, b.eps)};
    }
    friend FloatScalar operator*(const FloatScalar& a, const FloatScalar& b) {
        auto v = a.value() * b.value();
        return {v.real(), v.imag(), std::max(a.eps, b.eps)};
    }
    friend FloatScalar operator/(const FloatScalar& a, const FloatScalar& b) {
        auto v = a.value() / b.value();
        return {v.real(), v.imag(), std::max(a.eps, b.eps)};
    }
    FloatScalar& operator+=(const FloatScalar& b) { return *this = *this + b; }
    FloatScalar& operator-=(const FloatScalar& b) { return *this = *this - b; }
    FloatScalar& operator*=(const FloatScalar& b) { return *this = *this * b; }

    friend bool operator==(const FloatScalar& a, const FloatScalar& b) {
        double e = std::max(a.eps, b.eps);
        return std::abs(a.re - b.re) <= e && std::abs(a.im - b.im) <= e;
    }

    double norm() const { return re * re + im * im; }
    double abs() const { return std::hypot(re, im); }
};

inline bool is_zero(const FloatScalar& x) {
    return std::abs(x.re) <= x.eps && std::abs(x.im) <= x.eps;
}

inline FloatScalar conj(const FloatScalar& x) { return {x.re, -x.im, x.eps}; }

/// Sign of a float treated as a real quantity. `decided_by_eps` flags a
/// value within tolerance of zero, i.e. a tolerance-dependent decision.
struct FloatSign {
    int sign;
    bool decided_by_eps;
};

inline FloatSign float_sign(const FloatScalar& x) {
    if (std::abs(x.re) <= x.eps) return {0, true};
    return {x.re > 0 ? 1 : -1, false};
}

/// Principal complex square root; always representable in floats.
inline std::optional<FloatScalar> sqrt_exact(const FloatScalar& x) {
    auto r = std::sqrt(x.value());
    return FloatScalar{r.real(), r.imag(), x.eps};
}

inline FloatScalar to_float(const Rational& x, double eps = kDefaultEps) {
    return {to_double(x), 0.0, eps};
}
inline FloatScalar to_float(const GaussianRational& z, double eps = kDefaultEps) {
    return {to_double(z.re), to_double(z.im), eps};
}
inline FloatScalar to_float(const FloatScalar& x, double eps = kDefaultEps) {
    return {x.re, x.im, std::max(x.eps, eps)};
}

std::string format_scalar(const FloatScalar& x);  // literal.hpp

inline std::ostream& operator<<(std::ostream& os, const FloatScalar& x) {
    return os << format_scalar(x);
}

}  // namespace basis4
