#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "basis4/field.hpp"

namespace basis4 {

template <Scalar K>
struct Vec2 {
    std::array<K, 2> c{};

    Vec2() = default;
    Vec2(K a, K b) : c{std::move(a), std::move(b)} {}

    K& operator[](std::size_t i) { return c[i]; }
    const K& operator[](std::size_t i) const { return c[i]; }
    bool operator==(const Vec2&) const = default;
};

template <Scalar K>
struct Vec4 {
    std::array<K, 4> c{};

    Vec4() = default;
    Vec4(K a, K b, K x, K y)
        : c{std::move(a), std::move(b), std::move(x), std::move(y)} {}

    K& operator[](std::size_t i) { return c[i]; }
    const K& operator[](std::size_t i) const { return c[i]; }
    bool operator==(const Vec4&) const = default;
};

// ---- elementwise arithmetic --------------------------------------------

template <Scalar K>
Vec2<K> operator+(const Vec2<K>& a, const Vec2<K>& b) {
    return {a[0] + b[0], a[1] + b[1]};
}
template <Scalar K>
Vec2<K> operator-(const Vec2<K>& a, const Vec2<K>& b) {
    return {a[0] - b[0], a[1] - b[1]};
}
template <Scalar K>
Vec2<K> operator*(const K& s, const Vec2<K>& v) {
    return {s * v[0], s * v[1]};
}
template <Scalar K>
Vec2<K> operator-(const Vec2<K>& v) {
    return {-v[0], -v[1]};
}

template <Scalar K>
Vec4<K> operator+(const Vec4<K>& a, const Vec4<K>& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
template <Scalar K>
Vec4<K> operator-(const Vec4<K>& a, const Vec4<K>& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
template <Scalar K>
Vec4<K> operator*(const K& s, const Vec4<K>& v) {
    return {s * v[0], s * v[1], s * v[2], s * v[3]};
}
template <Scalar K>
Vec4<K> operator-(const Vec4<K>& v) {
    return {-v[0], -v[1], -v[2], -v[3]};
}

template <Scalar K>
bool is_zero(const Vec2<K>& v) {
    return is_zero(v[0]) && is_zero(v[1]);
}
template <Scalar K>
bool is_zero(const Vec4<K>& v) {
    return is_zero(v[0]) && is_zero(v[1]) && is_zero(v[2]) && is_zero(v[3]);
}

// ---- inner product and bilinear form -----------------------------------

/// Standard inner product, antilinear in the first argument.
template <Scalar K>
K inner2(const Vec2<K>& x, const Vec2<K>& y) {
    return conj(x[0]) * y[0] + conj(x[1]) * y[1];
}

template <Scalar K>
K inner4(const Vec4<K>& x, const Vec4<K>& y) {
    return conj(x[0]) * y[0] + conj(x[1]) * y[1] + conj(x[2]) * y[2] +
           conj(x[3]) * y[3];
}

/// The symmetric bilinear form whose quadratic form doubles the
/// decomposability residual: (z|z) = 2(z1 z4 - z2 z3). No conjugation.
template <Scalar K>
K bilinear(const Vec4<K>& a, const Vec4<K>& b) {
    return a[0] * b[3] - a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
}

/// The matrix of the bilinear form: antidiagonal (1, -1, -1, 1).
/// Symmetric and involutory; kept as a cross-check path for the closed
/// form above, not used in hot code.
template <Scalar K>
std::array<std::array<K, 4>, 4> bilinear_matrix() {
    std::array<std::array<K, 4>, 4> m{};
    m[0][3] = K(1);
    m[1][2] = K(-1);
    m[2][1] = K(-1);
    m[3][0] = K(1);
    return m;
}

template <Scalar K>
Vec4<K> apply_matrix(const std::array<std::array<K, 4>, 4>& m, const Vec4<K>& v) {
    Vec4<K> r;
    for (std::size_t i = 0; i < 4; ++i) {
        K acc(0);
        for (std::size_t j = 0; j < 4; ++j) acc = acc + m[i][j] * v[j];
        r[i] = acc;
    }
    return r;
}

template <Scalar K>
K bilinear_via_matrix(const Vec4<K>& a, const Vec4<K>& b) {
    Vec4<K> mb = apply_matrix(bilinear_matrix<K>(), b);
    K acc(0);
    for (std::size_t i = 0; i < 4; ++i) acc = acc + a[i] * mb[i];
    return acc;
}

// ---- tensor, cross and tilde maps ---------------------------------------

/// Flattened tensor product (u1 v1, u1 v2, u2 v1, u2 v2).
template <Scalar K>
Vec4<K> tensor2(const Vec2<K>& u, const Vec2<K>& v) {
    return {u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]};
}

/// (Anti)linear map producing a vector orthogonal to its input:
/// u -> (conj u2, -conj u1).
template <Scalar K>
Vec2<K> cross(const Vec2<K>& u) {
    return {conj(u[1]), -conj(u[0])};
}

/// The bijection x -> (conj x4, -conj x3, -conj x2, conj x1) bridging
/// the inner product and the bilinear form: <x|y> = (tilde x | y).
template <Scalar K>
Vec4<K> tilde(const Vec4<K>& x) {
    return {conj(x[3]), -conj(x[2]), -conj(x[1]), conj(x[0])};
}

/// Determinant of the 2x2 matrix with columns s and u.
template <Scalar K>
K det2(const Vec2<K>& s, const Vec2<K>& u) {
    return s[0] * u[1] - s[1] * u[0];
}

// ---- Gramian of the bilinear form ---------------------------------------

/// 2x2 Gramian of the bilinear form over a plane basis. Symmetric by
/// construction, so only the upper triangle is stored.
template <Scalar K>
struct Gramian2 {
    K g11{};
    K g12{};
    K g22{};

    bool operator==(const Gramian2&) const = default;

    K det() const { return g11 * g22 - g12 * g12; }
    bool zero() const { return is_zero(g11) && is_zero(g12) && is_zero(g22); }
    int rank() const {
        if (!is_zero(det())) return 2;
        return zero() ? 0 : 1;
    }
};

template <Scalar K>
Gramian2<K> gramian(const Vec4<K>& a, const Vec4<K>& b) {
    return {bilinear(a, a), bilinear(a, b), bilinear(b, b)};
}

// ---- coordinate change to diag(1, 1, -1, -1) ----------------------------

/// Primed coordinates scaled by sqrt(2) to stay in the field:
/// (x1+x4, x2-x3, x2+x3, x1-x4). In these coordinates
/// X^T diag(1,1,-1,-1) Y = 2 (x|y); the factor 2 is the price of the
/// square-root-free scaling.
template <Scalar K>
Vec4<K> to_prime_coords_scaled(const Vec4<K>& x) {
    return {x[0] + x[3], x[1] - x[2], x[1] + x[2], x[0] - x[3]};
}

/// Unscaled primed coordinates; float mode only since 1/sqrt(2) is
/// irrational. Satisfies X^T diag(1,1,-1,-1) Y = (x|y) within eps.
inline Vec4<FloatScalar> to_prime_coords(const Vec4<FloatScalar>& x) {
    const FloatScalar inv_sqrt2{1.0 / std::sqrt(2.0), 0.0, x[0].eps};
    Vec4<FloatScalar> s = to_prime_coords_scaled(x);
    return {inv_sqrt2 * s[0], inv_sqrt2 * s[1], inv_sqrt2 * s[2], inv_sqrt2 * s[3]};
}

// ---- span utilities ------------------------------------------------------

/// Row echelon rank with first-nonzero pivoting; exact over the exact
/// fields, eps-thresholded over floats.
template <Scalar K>
int rank_of(std::vector<Vec4<K>> rows) {
    std::size_t lead = 0;
    int rank = 0;
    for (std::size_t col = 0; col < 4 && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && is_zero(rows[pivot][col])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[lead]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || is_zero(rows[r][col])) continue;
            K f = rows[r][col] / rows[lead][col];
            rows[r] = rows[r] - f * rows[lead];
        }
        ++lead;
        ++rank;
    }
    return rank;
}

template <Scalar K>
bool linearly_independent(const Vec4<K>& a, const Vec4<K>& b) {
    return rank_of<K>({a, b}) == 2;
}

template <Scalar K>
Vec4<K> conj(const Vec4<K>& v) {
    return {conj(v[0]), conj(v[1]), conj(v[2]), conj(v[3])};
}

/// Basis of {y : sum_j rows[i][j] y_j = 0 for all i}. For orthogonality
/// constraints <e|y> = 0 pass conj(e) as the row.
template <Scalar K>
std::vector<Vec4<K>> null_space(std::vector<Vec4<K>> rows) {
    std::vector<int> pivot_cols;
    std::size_t lead = 0;
    for (int col = 0; col < 4 && lead < rows.size(); ++col) {
        std::size_t pr = lead;
        while (pr < rows.size() && is_zero(rows[pr][col])) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[pr], rows[lead]);
        K pivot = rows[lead][col];
        for (int j = 0; j < 4; ++j) rows[lead][j] = rows[lead][j] / pivot;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || is_zero(rows[r][col])) continue;
            K f = rows[r][col];
            for (int j = 0; j < 4; ++j) rows[r][j] = rows[r][j] - f * rows[lead][j];
        }
        pivot_cols.push_back(col);
        ++lead;
    }
    std::vector<Vec4<K>> basis;
    for (int col = 0; col < 4; ++col) {
        bool is_pivot = false;
        for (int pc : pivot_cols) is_pivot |= pc == col;
        if (is_pivot) continue;
        Vec4<K> v;
        v[col] = K(1);
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            v[pivot_cols[r]] = -rows[r][col];
        basis.push_back(v);
    }
    return basis;
}

/// Projective equality of rays: both nonzero with all 2x2 minors zero.
template <Scalar K>
bool proportional(const Vec4<K>& v, const Vec4<K>& w) {
    if (is_zero(v) || is_zero(w)) return false;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (!is_zero(v[i] * w[j] - v[j] * w[i])) return false;
    return true;
}

template <Scalar K>
bool in_span(const Vec4<K>& v, const std::vector<Vec4<K>>& span) {
    if (is_zero(v)) return true;
    auto rows = span;
    int base = rank_of(rows);
    rows.push_back(v);
    return rank_of(rows) == base;
}

template <Scalar K>
bool same_span(const std::vector<Vec4<K>>& a, const std::vector<Vec4<K>>& b) {
    auto ra = a;
    auto rb = b;
    if (rank_of(ra) != rank_of(rb)) return false;
    for (const auto& v : a)
        if (!in_span(v, b)) return false;
    return true;
}

// ---- float conversion ----------------------------------------------------

template <Scalar K>
Vec2<FloatScalar> to_float(const Vec2<K>& v, double eps = kDefaultEps) {
    return {to_float(v[0], eps), to_float(v[1], eps)};
}

template <Scalar K>
Vec4<FloatScalar> to_float(const Vec4<K>& v, double eps = kDefaultEps) {
    return {to_float(v[0], eps), to_float(v[1], eps), to_float(v[2], eps),
            to_float(v[3], eps)};
}

/// Euclidean norm squared as a double, for float-mode scale estimates.
template <Scalar K>
double norm2_as_double(const Vec4<K>& v) {
    double acc = 0;
    for (std::size_t i = 0; i < 4; ++i) acc += to_float(v[i]).norm();
    return acc;
}

}  // namespace basis4
