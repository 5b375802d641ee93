#pragma once

#include "basis4/float_scalar.hpp"
#include "basis4/gaussian.hpp"
#include "basis4/rational.hpp"

namespace basis4 {

/// Which classification rules apply: real planes carry a sign pattern,
/// complex planes only a rank.
enum class FieldTag { real, complex };

inline const char* to_string(FieldTag t) {
    return t == FieldTag::real ? "real" : "complex";
}

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr FieldTag tag = FieldTag::real;
};

template <>
struct FieldTraits<GaussianRational> {
    static constexpr bool exact = true;
    static constexpr FieldTag tag = FieldTag::complex;
};

template <>
struct FieldTraits<FloatScalar> {
    static constexpr bool exact = false;
    static constexpr FieldTag tag = FieldTag::complex;
};

/// The closed scalar union. Exact and float scalars never meet in one
/// expression; the type system rejects the mix outright.
template <class K>
concept Scalar = requires(K a, K b) {
    K(0);
    K(1);
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { conj(a) } -> std::convertible_to<K>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
};

static_assert(Scalar<Rational>);
static_assert(Scalar<GaussianRational>);
static_assert(Scalar<FloatScalar>);

}  // namespace basis4
