#pragma once

#include <array>
#include <numeric>

#include "ruled/rational.hpp"

namespace ruled {

using Vec2 = std::array<long long, 2>;
using Mat2 = std::array<std::array<long long, 2>, 2>;  // row major

inline long long det2(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

inline Vec2 mat2_apply(const Mat2& m, const Vec2& v) {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

inline Mat2 mat2_transpose(const Mat2& m) { return {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}}; }

// inverse of a determinant +-1 integer matrix
inline Mat2 mat2_inverse_unimodular(const Mat2& m) {
    long long d = det2(m);
    if (d != 1 && d != -1) throw BadInput("matrix is not unimodular");
    return {{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}};
}

inline bool is_primitive(const Vec2& v) {
    return std::gcd(v[0] < 0 ? -v[0] : v[0], v[1] < 0 ? -v[1] : v[1]) == 1;
}

using Point2 = std::array<Rational, 2>;

inline Rational dot(const Point2& p, const Vec2& v) {
    return p[0] * Rational(v[0]) + p[1] * Rational(v[1]);
}

inline long long dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

// primitive integer direction of a nonzero rational vector, preserving sign,
// together with the rational stretch factor ("affine length" when the input
// is an edge vector)
inline std::pair<Vec2, Rational> primitive_direction(const Point2& delta) {
    Int l = lcm(denominator(delta[0]), denominator(delta[1]));
    Int a = numerator(delta[0]) * (l / denominator(delta[0]));
    Int b = numerator(delta[1]) * (l / denominator(delta[1]));
    Int g = gcd(abs(a), abs(b));
    if (g == 0) throw BadInput("primitive_direction: zero vector");
    Vec2 dir{(long long)(a / g), (long long)(b / g)};
    return {dir, Rational(g, l)};
}

}  // namespace ruled
