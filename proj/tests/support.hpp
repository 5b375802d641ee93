#pragma once

// Shared deterministic generators for the property tests.

#include <random>
#include <utility>

#include "basis4/completion.hpp"
#include "basis4/plane.hpp"

namespace testsupport {

using namespace basis4;

using Rng = std::mt19937_64;

inline Rational rand_rational(Rng& rng, int max_num = 10, int max_den = 10) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline GaussianRational rand_gaussian(Rng& rng, int max_num = 10, int max_den = 10) {
    return {rand_rational(rng, max_num, max_den), rand_rational(rng, max_num, max_den)};
}

template <class K>
K rand_scalar(Rng& rng) {
    if constexpr (std::is_same_v<K, Rational>)
        return rand_rational(rng);
    else
        return rand_gaussian(rng);
}

template <class K>
Vec2<K> rand_vec2(Rng& rng) {
    return {rand_scalar<K>(rng), rand_scalar<K>(rng)};
}

template <class K>
Vec2<K> rand_vec2_nonzero(Rng& rng) {
    for (;;) {
        Vec2<K> v = rand_vec2<K>(rng);
        if (!is_zero(v)) return v;
    }
}

template <class K>
Vec4<K> rand_vec4(Rng& rng) {
    return {rand_scalar<K>(rng), rand_scalar<K>(rng), rand_scalar<K>(rng),
            rand_scalar<K>(rng)};
}

template <class K>
Vec4<K> rand_vec4_nonzero(Rng& rng) {
    for (;;) {
        Vec4<K> v = rand_vec4<K>(rng);
        if (!is_zero(v)) return v;
    }
}

template <class K>
std::pair<Vec4<K>, Vec4<K>> rand_plane_basis(Rng& rng) {
    for (;;) {
        Vec4<K> a = rand_vec4<K>(rng);
        Vec4<K> b = rand_vec4<K>(rng);
        if (linearly_independent(a, b)) return {a, b};
    }
}

template <class K>
Vec4<K> rand_decomposable(Rng& rng) {
    return tensor2(rand_vec2_nonzero<K>(rng), rand_vec2_nonzero<K>(rng));
}

/// Random orthogonal exact pair: e2 spans a random vector of the
/// orthocomplement of a random e1-extension, giving <e1|e2> = 0.
template <class K>
std::pair<Vec4<K>, Vec4<K>> rand_orthogonal_pair(Rng& rng) {
    for (;;) {
        Vec4<K> e1 = rand_vec4_nonzero<K>(rng);
        Vec4<K> x = rand_vec4<K>(rng);
        Vec4<K> e2 = inner4(e1, e1) * x - inner4(e1, x) * e1;
        if (!is_zero(e2) && linearly_independent(e1, e2)) return {e1, e2};
    }
}

}  // namespace testsupport
