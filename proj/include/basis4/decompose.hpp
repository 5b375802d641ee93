#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "basis4/literal.hpp"
#include "basis4/vec.hpp"

namespace basis4 {

/// Sign of a scalar that is required to be real-valued. Used by the
/// real-field classification rules; a genuinely complex value here is a
/// caller error.
inline int sign_real(const Rational& x) { return exact_sign(x); }
inline int sign_real(const GaussianRational& x) {
    if (!x.im.is_zero())
        throw DomainError("real-field sign decision on a complex value");
    return exact_sign(x.re);
}
inline int sign_real(const FloatScalar& x) { return float_sign(x).sign; }

/// z is decomposable iff z1 z4 - z2 z3 = 0 (float mode: within
/// eps * ||z||^2).
template <Scalar K>
K decomposability_residual(const Vec4<K>& z) {
    return z[0] * z[3] - z[1] * z[2];
}

template <Scalar K>
bool is_decomposable(const Vec4<K>& z) {
    if constexpr (FieldTraits<K>::exact) {
        return is_zero(decomposability_residual(z));
    } else {
        FloatScalar r = decomposability_residual(z);
        return r.abs() <= r.eps * norm2_as_double(z);
    }
}

/// Witness pair for a decomposable vector: scale * (left tensor right)
/// reproduces the input exactly.
template <Scalar K>
struct Factorization {
    Vec2<K> left;
    Vec2<K> right;
    K scale;
};

/// Canonical gauge: the factor pair is underdetermined (four unknowns,
/// three equations), so the first nonzero of z1, z2 pivots a stable
/// choice. left = (1, z3/z1) when z1 != 0, left = (1, z4/z2) when only
/// z2 != 0, left = (0, 1) when z1 = z2 = 0; right carries the surviving
/// row of components.
template <Scalar K>
Factorization<K> factorize(const Vec4<K>& z) {
    if (is_zero(z)) throw DomainError("cannot factorize the zero vector");
    if (!is_decomposable(z))
        throw NotDecomposableError("vector is not decomposable",
                                   format_scalar(decomposability_residual(z)));
    if (!is_zero(z[0]))
        return {Vec2<K>(K(1), z[2] / z[0]), Vec2<K>(z[0], z[1]), K(1)};
    if (!is_zero(z[1]))
        return {Vec2<K>(K(1), z[3] / z[1]), Vec2<K>(z[0], z[1]), K(1)};
    return {Vec2<K>(K(0), K(1)), Vec2<K>(z[2], z[3]), K(1)};
}

enum class LocusKind { all, two_rays, one_ray, none };

inline const char* to_string(LocusKind k) {
    switch (k) {
        case LocusKind::all: return "all";
        case LocusKind::two_rays: return "two-rays";
        case LocusKind::one_ray: return "one-ray";
        case LocusKind::none: return "none";
    }
    return "?";
}

/// The set of decomposable rays inside a plane. The kind is always an
/// exact statement; ray coordinates fall back to floats only when the
/// two-ray pair is irrational over the scalar field ("approx" rays).
template <Scalar K>
struct DecomposableLocus {
    LocusKind kind = LocusKind::none;
    std::vector<Vec4<K>> rays;
    std::vector<Vec4<FloatScalar>> approx_rays;
    double approx_residual = 0.0;  // max |(c|c)| / ||c||^2 over approx rays

    bool approximate() const { return !approx_rays.empty(); }
};

namespace detail {

inline std::complex<double> cval(const FloatScalar& x) { return x.value(); }

template <Scalar K>
void fill_approx_two_rays(DecomposableLocus<K>& out, const Vec4<K>& a,
                          const Vec4<K>& b, const Gramian2<K>& g) {
    Vec4<FloatScalar> fa = to_float(a);
    Vec4<FloatScalar> fb = to_float(b);
    std::complex<double> g11 = cval(to_float(g.g11));
    std::complex<double> g12 = cval(to_float(g.g12));
    std::complex<double> g22 = cval(to_float(g.g22));
    std::complex<double> root = std::sqrt(g12 * g12 - g11 * g22);
    for (std::complex<double> xi : {(-g12 + root) / g11, (-g12 - root) / g11}) {
        FloatScalar f{xi.real(), xi.imag()};
        Vec4<FloatScalar> c = f * fa + fb;
        double n = std::sqrt(norm2_as_double(c));
        c = FloatScalar{1.0 / n} * c;
        double res = bilinear(c, c).abs() / norm2_as_double(c);
        out.approx_residual = std::max(out.approx_residual, res);
        out.approx_rays.push_back(c);
    }
    out.kind = LocusKind::two_rays;
}

}  // namespace detail

/// Solves (xi a + b | xi a + b) = G11 xi^2 + 2 G12 xi + G22 = 0 within
/// the plane spanned by {a, b}, covering the G11 = 0 swap and the
/// G11 = G22 = 0 case where both basis vectors are already rays.
template <Scalar K>
DecomposableLocus<K> decomposables_in_plane(const Vec4<K>& a, const Vec4<K>& b,
                                            FieldTag tag = FieldTraits<K>::tag) {
    if (!linearly_independent(a, b))
        throw DomainError("plane basis is linearly dependent");
    Gramian2<K> g = gramian(a, b);
    DecomposableLocus<K> out;
    if (g.zero()) {
        out.kind = LocusKind::all;
        return out;
    }
    if (!is_zero(g.g11)) {
        K quarter_disc = g.g12 * g.g12 - g.g11 * g.g22;
        if (is_zero(quarter_disc)) {
            out.kind = LocusKind::one_ray;
            out.rays = {(-(g.g12 / g.g11)) * a + b};
            return out;
        }
        if (tag == FieldTag::real && sign_real(quarter_disc) < 0) {
            out.kind = LocusKind::none;
            return out;
        }
        if (auto root = sqrt_exact(quarter_disc)) {
            out.kind = LocusKind::two_rays;
            out.rays = {((-g.g12 + *root) / g.g11) * a + b,
                        ((-g.g12 - *root) / g.g11) * a + b};
            return out;
        }
        detail::fill_approx_two_rays(out, a, b, g);
        return out;
    }
    if (!is_zero(g.g22)) {
        // (a + eta b | a + eta b) = eta (2 G12 + eta G22): eta = 0 gives
        // the ray a, the second root exists iff G12 != 0.
        if (is_zero(g.g12)) {
            out.kind = LocusKind::one_ray;
            out.rays = {a};
            return out;
        }
        out.kind = LocusKind::two_rays;
        out.rays = {a, a - ((K(2) * g.g12) / g.g22) * b};
        return out;
    }
    out.kind = LocusKind::two_rays;  // G11 = G22 = 0, G12 != 0
    out.rays = {a, b};
    return out;
}

}  // namespace basis4
