#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "basis4/errors.hpp"

namespace basis4 {

using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

/// Arbitrary-precision rational. The backing type keeps the canonical
/// form invariant on every operation: denominator > 0 and
/// gcd(|numerator|, denominator) = 1. Expression templates are off so
/// arithmetic yields plain values the vector layer can consume.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline int exact_sign(const Rational& x) { return x.sign(); }

inline bool is_zero(const Rational& x) { return x.is_zero(); }

/// Complex conjugation restricted to the reals: the identity.
inline Rational conj(const Rational& x) { return x; }

/// Exact integer square root, empty when n is not a perfect square.
inline std::optional<BigInt> sqrt_exact(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// Square root within Q. Returns the nonnegative root when x is a
/// perfect square, empty when the root is irrational. A negative input
/// has no real square root at all and is a domain error.
inline std::optional<Rational> sqrt_exact(const Rational& x) {
    if (x.sign() < 0) throw DomainError("no real square root");
    auto n = sqrt_exact(numerator(x));
    if (!n) return std::nullopt;
    auto d = sqrt_exact(denominator(x));
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace basis4
