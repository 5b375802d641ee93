#pragma once

#include <complex>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "basis4/plane.hpp"

namespace basis4 {

/// Exact basis of {y : <e1|y> = <e2|y> = 0}, returned inner-product
/// orthogonal to each other (scaled Gram-Schmidt, division-free).
template <Scalar K>
std::pair<Vec4<K>, Vec4<K>> orthocomplement(const Vec4<K>& e1, const Vec4<K>& e2) {
    if (!linearly_independent(e1, e2))
        throw DomainError("orthocomplement needs linearly independent vectors");
    std::vector<Vec4<K>> basis = null_space<K>({conj(e1), conj(e2)});
    Vec4<K> a = basis[0];
    Vec4<K> b = inner4(a, a) * basis[1] - inner4(a, basis[1]) * a;
    return {a, b};
}

/// Orthogonal basis of the whole space, projective in exact mode and
/// unit-norm in float mode.
template <Scalar K>
struct Context {
    std::array<Vec4<K>, 4> vectors;
};

/// Outcome of the unitary-style verification: the full matrix of inner
/// products, the offending pairs, and (float mode) the determinant
/// magnitude and quarter trace, both of which must be 1 for a context.
template <Scalar K>
struct ContextReport {
    std::array<std::array<K, 4>, 4> gram{};
    std::vector<std::pair<int, int>> failures;  // off-diagonal pairs with <vi|vj> != 0
    bool orthogonal = false;
    std::optional<double> det_magnitude;  // float mode only
    std::optional<double> quarter_trace;  // float mode only
    bool pass = false;
};

namespace detail {

inline double abs_det4(const std::array<Vec4<FloatScalar>, 4>& cols) {
    std::complex<double> m[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = cols[j][i].value();
    std::complex<double> det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (std::abs(m[pivot][col]) == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < 4; ++j) std::swap(m[pivot][j], m[col][j]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < 4; ++r) {
            std::complex<double> f = m[r][col] / m[col][col];
            for (int j = col; j < 4; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return std::abs(det);
}

}  // namespace detail

template <Scalar K>
ContextReport<K> verify_context(const Context<K>& c) {
    ContextReport<K> rep;
    rep.orthogonal = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            rep.gram[i][j] = inner4(c.vectors[i], c.vectors[j]);
            if (i != j && !is_zero(rep.gram[i][j])) {
                rep.orthogonal = false;
                if (i < j) rep.failures.emplace_back(i, j);
            }
        }
    rep.pass = rep.orthogonal;
    if constexpr (!FieldTraits<K>::exact) {
        double eps = c.vectors[0][0].eps;
        double tr = 0;
        for (int j = 0; j < 4; ++j) tr += norm2_as_double(c.vectors[j]);
        rep.quarter_trace = tr / 4.0;
        rep.det_magnitude = detail::abs_det4(c.vectors);
        rep.pass = rep.pass && std::abs(*rep.det_magnitude - 1.0) <= eps &&
                   std::abs(*rep.quarter_trace - 1.0) <= eps;
    }
    return rep;
}

inline Vec4<FloatScalar> normalized(const Vec4<FloatScalar>& v) {
    double n = std::sqrt(norm2_as_double(v));
    if (n == 0.0) throw DomainError("cannot normalize the zero vector");
    return FloatScalar{1.0 / n, 0.0, v[0].eps} * v;
}

template <Scalar K>
Context<FloatScalar> normalized_context(const Context<K>& c, double eps = kDefaultEps) {
    Context<FloatScalar> out;
    for (int i = 0; i < 4; ++i) out.vectors[i] = normalized(to_float(c.vectors[i], eps));
    return out;
}

// ---- policy-driven completion --------------------------------------------

enum class CompletionPolicy { any, decomposable_pair, indecomposable_pair, mixed_pair };

inline const char* to_string(CompletionPolicy p) {
    switch (p) {
        case CompletionPolicy::any: return "any";
        case CompletionPolicy::decomposable_pair: return "decomposable";
        case CompletionPolicy::indecomposable_pair: return "indecomposable";
        case CompletionPolicy::mixed_pair: return "mixed";
    }
    return "?";
}

inline std::optional<CompletionPolicy> parse_policy(std::string_view s) {
    if (s == "any") return CompletionPolicy::any;
    if (s == "decomposable") return CompletionPolicy::decomposable_pair;
    if (s == "indecomposable") return CompletionPolicy::indecomposable_pair;
    if (s == "mixed") return CompletionPolicy::mixed_pair;
    return std::nullopt;
}

/// Structured rejection of an infeasible completion request; the plane
/// type of the orthocomplement is the justification.
struct Refusal {
    CompletionPolicy policy;
    PlaneType perp_type;
    std::string reason;
};

template <Scalar K>
struct CompletionOutcome {
    PlaneType perp_type = PlaneType::zero_zero;
    std::optional<Context<K>> context;
    std::optional<Context<FloatScalar>> approx_context;  // irrational ray pair
    std::optional<Refusal> refusal;

    bool ok() const { return !refusal.has_value(); }
};

namespace detail {

/// On a plane that is not type (0,0) at most two rays are decomposable,
/// so sweeping u_t = a + t b with its in-plane orthogonal partner
/// v_t = conj(t) <b|b> a - <a|a> b hits an indecomposable pair within
/// t <= 5. Requires <a|b> = 0.
template <Scalar K>
std::pair<Vec4<K>, Vec4<K>> indecomposable_pair_sweep(const Vec4<K>& a, const Vec4<K>& b) {
    if (!is_decomposable(a) && !is_decomposable(b)) return {a, b};
    K na = inner4(a, a);
    K nb = inner4(b, b);
    for (int t = 1; t <= 5; ++t) {
        Vec4<K> u = a + K(t) * b;
        Vec4<K> v = (conj(K(t)) * nb) * a - na * b;
        if (!is_decomposable(u) && !is_decomposable(v)) return {u, v};
    }
    throw Error("indecomposable sweep failed; plane cannot be of the assumed type");
}

/// Orthogonality of the two decomposable rays of a two-ray plane with
/// <a|b> = 0. Real field: exact via Vieta, <c+|c-> = (G22/G11)|a|^2 +
/// |b|^2, valid even when the rays themselves are irrational.
template <Scalar K>
bool approx_rays_orthogonal_real(const Vec4<K>& a, const Vec4<K>& b, const Gramian2<K>& g) {
    K lhs = g.g22 * inner4(a, a) + g.g11 * inner4(b, b);
    return is_zero(lhs);
}

}  // namespace detail

/// Completes the orthogonal pair {e1, e2} to a context {e1, e2, a, b}
/// honoring the policy, or refuses with the orthocomplement's type.
/// Feasibility: decomposable pair needs type (0,0) or orthogonal rays;
/// indecomposable pair needs any type but (0,0); mixed needs (+-1,0).
template <Scalar K>
CompletionOutcome<K> complete_context(const Vec4<K>& e1, const Vec4<K>& e2,
                                      CompletionPolicy policy,
                                      FieldTag tag = FieldTraits<K>::tag) {
    if (is_zero(e1) || is_zero(e2))
        throw DomainError("context completion needs nonzero vectors");
    if (!is_zero(inner4(e1, e2)))
        throw DomainError("context completion needs orthogonal input vectors");
    auto [a, b] = orthocomplement(e1, e2);
    Plane<K> perp = make_plane(a, b, tag);
    PlaneType type = classify(perp);

    CompletionOutcome<K> out;
    out.perp_type = type;
    auto refuse = [&](std::string reason) {
        out.refusal = Refusal{policy, type, std::move(reason)};
        return out;
    };
    auto accept = [&](const Vec4<K>& x, const Vec4<K>& y) {
        out.context = Context<K>{{e1, e2, x, y}};
        return out;
    };

    switch (policy) {
        case CompletionPolicy::any:
            return accept(a, b);

        case CompletionPolicy::indecomposable_pair: {
            if (type == PlaneType::zero_zero)
                return refuse("every vector of a type (0,0) plane is decomposable");
            auto [u, v] = detail::indecomposable_pair_sweep(a, b);
            return accept(u, v);
        }

        case CompletionPolicy::decomposable_pair: {
            if (type == PlaneType::zero_zero) return accept(a, b);
            DecomposableLocus<K> locus = decomposables_in_plane(perp);
            if (locus.kind == LocusKind::one_ray)
                return refuse("plane holds a single decomposable ray");
            if (locus.kind == LocusKind::none)
                return refuse("plane holds no decomposable vectors");
            if (!locus.approximate()) {
                if (is_zero(inner4(locus.rays[0], locus.rays[1])))
                    return accept(locus.rays[0], locus.rays[1]);
                return refuse("decomposable rays not orthogonal");
            }
            // Irrational ray pair. Over the real field the orthogonality
            // decision is still exact; over the complex field it is made
            // at the float tolerance.
            bool ortho;
            if (tag == FieldTag::real) {
                ortho = detail::approx_rays_orthogonal_real(a, b, perp.gram);
            } else {
                FloatScalar ip = inner4(locus.approx_rays[0], locus.approx_rays[1]);
                ortho = ip.abs() <= ip.eps;
            }
            if (!ortho) return refuse("decomposable rays not orthogonal");
            Context<FloatScalar> ctx{{normalized(to_float(e1)), normalized(to_float(e2)),
                                      locus.approx_rays[0], locus.approx_rays[1]}};
            out.approx_context = ctx;
            return out;
        }

        case CompletionPolicy::mixed_pair: {
            if (type != PlaneType::one_zero && type != PlaneType::minus_one_zero)
                return refuse("mixed completion needs a plane of type (1,0) or (-1,0)");
            DecomposableLocus<K> locus = decomposables_in_plane(perp);
            const Vec4<K>& c = locus.rays[0];
            const Vec4<K>& x = proportional(c, a) ? b : a;
            Vec4<K> d = inner4(c, c) * x - inner4(c, x) * c;
            return accept(c, d);
        }
    }
    throw Error("unreachable completion policy");
}

// ---- tensor-basis construction -------------------------------------------

/// Given a plane spanned by the decomposable pair {s (x) t, u (x) v},
/// returns the decomposable pair (a, b) = (u^x (x) t^x, s^x (x) v^x)
/// spanning its orthocomplement.
template <Scalar K>
std::pair<Vec4<K>, Vec4<K>> tensor_complete(const Vec2<K>& s, const Vec2<K>& t,
                                            const Vec2<K>& u, const Vec2<K>& v) {
    if (is_zero(det2(s, u)))
        throw DomainError("det(s,u) vanishes: {s,u} is not a basis");
    if (is_zero(det2(t, v)))
        throw DomainError("det(t,v) vanishes: {t,v} is not a basis");
    return {tensor2(cross(u), cross(t)), tensor2(cross(s), cross(v))};
}

struct TetrahedronPlane {
    int i;
    int j;
    PlaneType type;
};

template <Scalar K>
struct Tetrahedron {
    std::array<Vec4<K>, 4> vertices;  // s^x(x)t^x, s^x(x)v^x, u^x(x)t^x, u^x(x)v^x
    std::array<TetrahedronPlane, 6> planes;
};

/// The six planes spanned by pairs of the four decomposable basis
/// vectors: four of type (0,0) and two of type (1,-1) / complex (1,1).
template <Scalar K>
Tetrahedron<K> tetrahedron_planes(const Vec2<K>& s, const Vec2<K>& t, const Vec2<K>& u,
                                  const Vec2<K>& v, FieldTag tag = FieldTraits<K>::tag) {
    if (is_zero(det2(s, u)))
        throw DomainError("det(s,u) vanishes: {s,u} is not a basis");
    if (is_zero(det2(t, v)))
        throw DomainError("det(t,v) vanishes: {t,v} is not a basis");
    Tetrahedron<K> out;
    out.vertices = {tensor2(cross(s), cross(t)), tensor2(cross(s), cross(v)),
                    tensor2(cross(u), cross(t)), tensor2(cross(u), cross(v))};
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            out.planes[k++] = {i, j, classify(out.vertices[i], out.vertices[j], tag)};
        }
    return out;
}

// ---- steering --------------------------------------------------------------

enum class SteeringGuarantee { all_factorizable, all_entangled, mixed };

inline const char* to_string(SteeringGuarantee g) {
    switch (g) {
        case SteeringGuarantee::all_factorizable: return "all-factorizable";
        case SteeringGuarantee::all_entangled: return "all-entangled";
        case SteeringGuarantee::mixed: return "mixed";
    }
    return "?";
}

/// Classification-level statement about the orthocomplement of the
/// source plane: every vector factorizable iff the perp plane is
/// (0,0); every vector entangled iff the perp plane is real definite.
struct SteeringReport {
    PlaneType source_type;
    PlaneType perp_type;
    SteeringGuarantee guarantee;
};

template <Scalar K>
SteeringReport steering_report(const Vec4<K>& e1, const Vec4<K>& e2,
                               FieldTag tag = FieldTraits<K>::tag) {
    SteeringReport rep{};
    rep.source_type = classify(e1, e2, tag);
    auto [a, b] = orthocomplement(e1, e2);
    rep.perp_type = classify(a, b, tag);  // computed directly, not transferred
    if (rep.perp_type == PlaneType::zero_zero) {
        rep.guarantee = SteeringGuarantee::all_factorizable;
    } else if (tag == FieldTag::real && (rep.perp_type == PlaneType::one_one ||
                                         rep.perp_type == PlaneType::minus_one_minus_one)) {
        rep.guarantee = SteeringGuarantee::all_entangled;
    } else {
        rep.guarantee = SteeringGuarantee::mixed;
    }
    return rep;
}

/// Monte-Carlo confirmation of a steering guarantee: random unit
/// vectors of the perp plane, decomposability checked at eps. Sampling
/// is deterministic in (seed, index) and safe to fan out.
struct SteeringSamples {
    int samples = 0;
    int decomposable = 0;
    int indecomposable = 0;
    bool consistent = false;
};

template <Scalar K>
SteeringSamples steering_confirmation(const Vec4<K>& e1, const Vec4<K>& e2,
                                      int samples, std::uint64_t seed,
                                      double eps = kDefaultEps,
                                      FieldTag tag = FieldTraits<K>::tag) {
    SteeringReport rep = steering_report(e1, e2, tag);
    auto [a, b] = orthocomplement(e1, e2);
    Vec4<FloatScalar> fa = to_float(a, eps);
    Vec4<FloatScalar> fb = to_float(b, eps);
    int dec = 0;
    int indec = 0;
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : dec, indec) schedule(static)
#endif
    for (int k = 0; k < samples; ++k) {
        std::seed_seq sq{seed, static_cast<std::uint64_t>(k)};
        std::mt19937_64 rng(sq);
        std::normal_distribution<double> gauss(0.0, 1.0);
        auto coeff = [&]() -> FloatScalar {
            double re = gauss(rng);
            double im = tag == FieldTag::complex ? gauss(rng) : 0.0;
            return {re, im, eps};
        };
        FloatScalar ca = coeff();  // fixed draw order
        FloatScalar cb = coeff();
        Vec4<FloatScalar> z = normalized(ca * fa + cb * fb);
        if (is_decomposable(z))
            ++dec;
        else
            ++indec;
    }
    SteeringSamples out;
    out.samples = samples;
    out.decomposable = dec;
    out.indecomposable = indec;
    switch (rep.guarantee) {
        case SteeringGuarantee::all_factorizable: out.consistent = indec == 0; break;
        case SteeringGuarantee::all_entangled: out.consistent = dec == 0; break;
        case SteeringGuarantee::mixed: out.consistent = true; break;
    }
    return out;
}

}  // namespace basis4
