#pragma once

#include <optional>
#include <ostream>
#include <utility>

#include "basis4/rational.hpp"

namespace basis4 {

/// Complex scalar with rational real and imaginary parts. Closed under
/// +, -, *, / (nonzero divisor) and conjugation.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(int n) : re(n) {}  // NOLINT: implicit by design
    GaussianRational(Rational real) : re(std::move(real)) {}
    GaussianRational(Rational real, Rational imag)
        : re(std::move(real)), im(std::move(imag)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool operator==(const GaussianRational&) const = default;

    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n.is_zero()) throw DomainError("division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    /// Squared modulus, a nonnegative rational.
    Rational norm() const { return re * re + im * im; }
};

inline bool is_zero(const GaussianRational& z) { return z.re.is_zero() && z.im.is_zero(); }

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

/// Square root within Q(i), empty when the root leaves the field.
/// For z = c + di the real part of any root satisfies a^2 = (c + |z|)/2,
/// so existence reduces to two rational perfect-square tests. The
/// returned root has Re > 0, or Re = 0 and Im > 0.
inline std::optional<GaussianRational> sqrt_exact(const GaussianRational& z) {
    if (is_zero(z)) return GaussianRational{};
    Rational n2 = z.norm();
    auto mag = sqrt_exact(n2);
    if (!mag) return std::nullopt;
    Rational a2 = (z.re + *mag) / 2;
    auto a = sqrt_exact(a2);
    if (!a) return std::nullopt;
    if (!a->is_zero()) {
        return GaussianRational(*a, z.im / (2 * *a));
    }
    // a = 0 happens only for z a nonpositive real; the root is purely
    // imaginary with b^2 = -Re z.
    auto b = sqrt_exact(Rational(-z.re));
    if (!b) return std::nullopt;
    return GaussianRational(Rational(0), *b);
}

std::string format_scalar(const GaussianRational& z);  // literal.hpp

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << format_scalar(z);
}

}  // namespace basis4
