#pragma once

#include <string_view>
#include <vector>

#include "basis4/decompose.hpp"
#include "basis4/vec.hpp"

namespace basis4 {

/// Signature of the bilinear form restricted to a plane. Complex planes
/// never see the -1 entries (only a rank survives scaling there).
enum class PlaneType {
    zero_zero,            // (0,0)
    one_zero,             // (1,0)
    minus_one_zero,       // (-1,0)
    one_one,              // (1,1)
    minus_one_minus_one,  // (-1,-1)
    one_minus_one,        // (1,-1)
};

inline const char* to_string(PlaneType t) {
    switch (t) {
        case PlaneType::zero_zero: return "(0,0)";
        case PlaneType::one_zero: return "(1,0)";
        case PlaneType::minus_one_zero: return "(-1,0)";
        case PlaneType::one_one: return "(1,1)";
        case PlaneType::minus_one_minus_one: return "(-1,-1)";
        case PlaneType::one_minus_one: return "(1,-1)";
    }
    return "?";
}

template <Scalar K>
void check_field_tag(FieldTag tag) {
    if constexpr (std::is_same_v<K, Rational>) {
        if (tag != FieldTag::real)
            throw DomainError("rational scalars live over the real field");
    }
    if constexpr (std::is_same_v<K, GaussianRational>) {
        (void)tag;  // complex storage may carry a real-field tag for
                    // real-valued data; sign decisions enforce realness.
    }
}

/// Two-dimensional subspace given by an ordered independent basis, with
/// the bilinear-form Gramian cached.
template <Scalar K>
struct Plane {
    Vec4<K> a;
    Vec4<K> b;
    FieldTag tag;
    Gramian2<K> gram;
};

template <Scalar K>
Plane<K> make_plane(const Vec4<K>& a, const Vec4<K>& b,
                    FieldTag tag = FieldTraits<K>::tag) {
    check_field_tag<K>(tag);
    if (!linearly_independent(a, b))
        throw DomainError("plane basis is linearly dependent");
    return Plane<K>{a, b, tag, gramian(a, b)};
}

struct Classification {
    PlaneType type;
    bool tolerance_dependent = false;  // float mode: a zero decision used eps
};

namespace detail {

template <Scalar K>
int classify_sign(const K& x, bool& used_eps) {
    if constexpr (std::is_same_v<K, FloatScalar>) {
        FloatSign s = float_sign(x);
        used_eps |= s.decided_by_eps;
        return s.sign;
    } else {
        return sign_real(x);
    }
}

template <Scalar K>
bool classify_zero(const K& x, bool& used_eps) {
    if constexpr (std::is_same_v<K, FloatScalar>) {
        bool z = is_zero(x);
        used_eps |= z;
        return z;
    } else {
        return is_zero(x);
    }
}

}  // namespace detail

/// Real case: signs of the Gram determinant and diagonal decide among
/// the six signatures. Complex case: the rank alone decides among
/// (0,0), (1,0), (1,1). Basis-independent.
template <Scalar K>
Classification classify_tagged(const Plane<K>& p) {
    const Gramian2<K>& g = p.gram;
    bool used_eps = false;
    Classification r;
    if (p.tag == FieldTag::real) {
        int sd = detail::classify_sign(g.det(), used_eps);
        if (sd > 0) {
            r.type = detail::classify_sign(g.g11, used_eps) > 0
                         ? PlaneType::one_one
                         : PlaneType::minus_one_minus_one;
        } else if (sd < 0) {
            r.type = PlaneType::one_minus_one;
        } else if (detail::classify_zero(g.g11, used_eps) &&
                   detail::classify_zero(g.g12, used_eps) &&
                   detail::classify_zero(g.g22, used_eps)) {
            r.type = PlaneType::zero_zero;
        } else if (detail::classify_sign(g.g11, used_eps) > 0 ||
                   detail::classify_sign(g.g22, used_eps) > 0) {
            r.type = PlaneType::one_zero;
        } else {
            r.type = PlaneType::minus_one_zero;
        }
    } else {
        bool det_zero = detail::classify_zero(g.det(), used_eps);
        if (!det_zero) {
            r.type = PlaneType::one_one;
        } else if (detail::classify_zero(g.g11, used_eps) &&
                   detail::classify_zero(g.g12, used_eps) &&
                   detail::classify_zero(g.g22, used_eps)) {
            r.type = PlaneType::zero_zero;
        } else {
            r.type = PlaneType::one_zero;
        }
    }
    r.tolerance_dependent = used_eps && !FieldTraits<K>::exact;
    return r;
}

template <Scalar K>
PlaneType classify(const Plane<K>& p) {
    return classify_tagged(p).type;
}

template <Scalar K>
PlaneType classify(const Vec4<K>& a, const Vec4<K>& b,
                   FieldTag tag = FieldTraits<K>::tag) {
    return classify(make_plane(a, b, tag));
}

/// Basis of the same span with a diagonal Gramian. Entries are not
/// scaled to +-1 (that would need square roots); the signature rides
/// along instead. Ordering: positive/nonzero entries first.
template <Scalar K>
struct CanonicalBasis {
    Vec4<K> c1;
    Vec4<K> c2;
    Gramian2<K> gram;  // diagonal: g12 = 0
    PlaneType signature;
};

template <Scalar K>
CanonicalBasis<K> canonical_basis(const Plane<K>& p) {
    const Gramian2<K>& g = p.gram;
    Vec4<K> c1, c2;
    if (!is_zero(g.g11)) {
        // square-root-free Gram-Schmidt inside the form, scaled to
        // avoid division: c2 = G11 b - G12 a has (c1|c2) = 0.
        c1 = p.a;
        c2 = g.g11 * p.b - g.g12 * p.a;
    } else if (!is_zero(g.g22)) {
        c1 = p.b;
        c2 = g.g22 * p.a - g.g12 * p.b;
    } else if (!is_zero(g.g12)) {
        c1 = p.a + p.b;
        c2 = p.a - p.b;
    } else {
        c1 = p.a;
        c2 = p.b;
    }
    Gramian2<K> d = gramian(c1, c2);
    // Order entries like the normal forms: positive, then negative,
    // then zero (real); nonzero before zero (complex).
    bool swap_order;
    if (p.tag == FieldTag::real) {
        bool ignore = false;
        auto key = [&](const K& x) {
            return detail::classify_zero(x, ignore) ? -2
                                                    : detail::classify_sign(x, ignore);
        };
        swap_order = key(d.g11) < key(d.g22);
    } else {
        swap_order = is_zero(d.g11) && !is_zero(d.g22);
    }
    if (swap_order) {
        std::swap(c1, c2);
        std::swap(d.g11, d.g22);
    }
    return {c1, c2, d, classify(p)};
}

/// Basis of {x in plane : (x|y) = 0 for all y in the plane}; the
/// canonical vectors whose diagonal entry vanishes.
template <Scalar K>
std::vector<Vec4<K>> radical(const Plane<K>& p) {
    CanonicalBasis<K> cb = canonical_basis(p);
    std::vector<Vec4<K>> out;
    if (is_zero(cb.gram.g11)) out.push_back(cb.c1);
    if (is_zero(cb.gram.g22)) out.push_back(cb.c2);
    return out;
}

/// Image of the plane under the tilde bijection.
template <Scalar K>
Plane<K> tilde_plane(const Plane<K>& p) {
    return make_plane(tilde(p.a), tilde(p.b), p.tag);
}

/// Maps the type of the tilde image to the type of the orthocomplement.
/// Complex planes transfer unchanged; real planes flip the sign of any
/// definite part: (+-1,+-1) <-> (-+1,-+1) and (+-1,0) <-> (-+1,0).
inline PlaneType transfer_type(PlaneType t, FieldTag tag) {
    if (tag == FieldTag::complex) return t;
    switch (t) {
        case PlaneType::zero_zero: return PlaneType::zero_zero;
        case PlaneType::one_minus_one: return PlaneType::one_minus_one;
        case PlaneType::one_one: return PlaneType::minus_one_minus_one;
        case PlaneType::minus_one_minus_one: return PlaneType::one_one;
        case PlaneType::one_zero: return PlaneType::minus_one_zero;
        case PlaneType::minus_one_zero: return PlaneType::one_zero;
    }
    return t;
}

/// Locus of decomposable rays, matching the cached Gramian.
template <Scalar K>
DecomposableLocus<K> decomposables_in_plane(const Plane<K>& p) {
    return decomposables_in_plane(p.a, p.b, p.tag);
}

}  // namespace basis4
