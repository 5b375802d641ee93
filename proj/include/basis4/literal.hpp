#pragma once

#include <string>
#include <string_view>
#include <type_traits>

#include "basis4/vec.hpp"

namespace basis4 {

/// Parsed exact scalar literal. The grammar covers signed integers,
/// p/q fractions, decimals, and imaginary combinations such as
/// `i`, `-i`, `2i`, `2+3i`, `-3/4+9/4i`. Tokens are whitespace-free.
struct ScalarParts {
    Rational re;
    Rational im;
};

/// Parses one scalar token. `base_offset` shifts reported error
/// positions when the token is embedded in a larger literal.
ScalarParts parse_scalar_parts(std::string_view text, std::size_t base_offset = 0);

std::string format_scalar(const Rational& x);
// GaussianRational and FloatScalar overloads are declared with their types.

std::string format_double(double x);

template <Scalar K>
K parse_scalar(std::string_view text, double eps = kDefaultEps) {
    ScalarParts p = parse_scalar_parts(text);
    if constexpr (std::is_same_v<K, Rational>) {
        if (!p.im.is_zero())
            throw ParseError("imaginary literal not allowed over the real field", 0);
        return p.re;
    } else if constexpr (std::is_same_v<K, GaussianRational>) {
        (void)eps;
        return GaussianRational(p.re, p.im);
    } else {
        return FloatScalar(to_double(p.re), to_double(p.im), eps);
    }
}

namespace detail {
/// Splits "(a,b,...)" into component tokens; validates arity.
std::vector<std::pair<std::string, std::size_t>> split_vector_literal(
    std::string_view text, std::size_t arity);

template <Scalar K>
K parse_component(const std::pair<std::string, std::size_t>& token, double eps) {
    try {
        return parse_scalar<K>(token.first, eps);
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()), token.second + e.position);
    }
}
}  // namespace detail

template <Scalar K>
Vec4<K> parse_vec4(std::string_view text, double eps = kDefaultEps) {
    auto tok = detail::split_vector_literal(text, 4);
    return {detail::parse_component<K>(tok[0], eps), detail::parse_component<K>(tok[1], eps),
            detail::parse_component<K>(tok[2], eps), detail::parse_component<K>(tok[3], eps)};
}

template <Scalar K>
Vec2<K> parse_vec2(std::string_view text, double eps = kDefaultEps) {
    auto tok = detail::split_vector_literal(text, 2);
    return {detail::parse_component<K>(tok[0], eps), detail::parse_component<K>(tok[1], eps)};
}

template <Scalar K>
std::string format_vec(const Vec2<K>& v) {
    return "(" + format_scalar(v[0]) + "," + format_scalar(v[1]) + ")";
}

template <Scalar K>
std::string format_vec(const Vec4<K>& v) {
    return "(" + format_scalar(v[0]) + "," + format_scalar(v[1]) + "," +
           format_scalar(v[2]) + "," + format_scalar(v[3]) + ")";
}

}  // namespace basis4
