#pragma once

#include <vector>

#include "ruled/lattice.hpp"
#include "ruled/laurent.hpp"

/*
 * Delzant data for the Hirzebruch surface F_n carrying the split symplectic
 * form at level lambda.  F_n arises as a Kaehler reduction of C^4 by a
 * two-torus; the reduced torus action has the trapezoid below as its moment
 * image, and the isotropy weights at the four fixed points are the primitive
 * edge vectors at the corresponding vertices.
 */

namespace ruled {

enum class SurfaceFamily { untwisted, twisted };  // S^2 x S^2 vs the nontrivial bundle

inline const char* family_name(SurfaceFamily f) {
    return f == SurfaceFamily::untwisted ? "untwisted" : "twisted";
}

struct HirzebruchParams {
    int n = 0;
    Rational lambda = 1;

    // level of the symplectic form on the reduced space
    Rational mu() const {
        return n % 2 == 0 ? lambda + Rational(n, 2) : lambda + Rational(n + 1, 2);
    }
    SurfaceFamily family() const {
        return n % 2 == 0 ? SurfaceFamily::untwisted : SurfaceFamily::twisted;
    }
};

struct MomentPolygon {
    std::vector<Point2> vertices;  // cyclic order
};

// trapezoid A=(0,0), B=(1,0), C=(1,mu), D=(0,mu-n)
inline MomentPolygon moment_polygon(const HirzebruchParams& p) {
    if (p.n < 0) throw BadInput("moment_polygon: negative n");
    if (p.lambda <= 0) throw BadInput("moment_polygon: lambda must be positive");
    Rational mu = p.mu();
    if (mu <= p.n) throw DegeneratePolygon("moment_polygon: mu <= n");
    MomentPolygon poly;
    poly.vertices = {Point2{0, 0}, Point2{1, 0}, Point2{1, mu}, Point2{0, mu - p.n}};
    return poly;
}

// reduction presentation: the inclusion of the reduced two-torus into T^4
// and the level at which the reduction is taken
struct ReductionData {
    std::vector<Vec2> inclusion_rows;  // 4 x 2 integer matrix, one row per T^4 factor
    Point2 level;
};

inline ReductionData reduction_data(int n, const Rational& lambda) {
    HirzebruchParams p{n, lambda};
    return {{Vec2{n, 1}, Vec2{0, 1}, Vec2{1, 0}, Vec2{1, 0}}, Point2{p.mu(), 1}};
}

struct VertexWeights {
    Point2 vertex;
    std::array<Vec2, 2> weights;  // exponent vectors, sorted descending lex
};

inline bool lex_less_vec2(const Vec2& a, const Vec2& b) {
    return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
}

// isotropy weights at the fixed points = primitive edge vectors at each
// vertex; also certifies the Delzant condition (unimodular corners)
inline std::vector<VertexWeights> fixed_point_weights(const MomentPolygon& poly) {
    std::size_t n = poly.vertices.size();
    if (n != 4) throw BadInput("fixed_point_weights: expected 4 vertices");
    std::vector<VertexWeights> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& v = poly.vertices[i];
        const Point2& next = poly.vertices[(i + 1) % n];
        const Point2& prev = poly.vertices[(i + n - 1) % n];
        Vec2 a = primitive_direction({next[0] - v[0], next[1] - v[1]}).first;
        Vec2 b = primitive_direction({prev[0] - v[0], prev[1] - v[1]}).first;
        long long d = a[0] * b[1] - a[1] * b[0];
        if (d != 1 && d != -1) throw NotDelzant("corner is not unimodular");
        if (lex_less_vec2(a, b)) std::swap(a, b);
        out.push_back({v, {a, b}});
    }
    return out;
}

// change of basis from the moment-map torus basis to the standard basis of
// the maximal torus of the isometry group; acts on circle vectors as
// standard = M * moment
inline Mat2 standard_basis_change(int n) {
    if (n < 0) throw BadInput("standard_basis_change: negative n");
    if (n == 0) return {{{-1, 0}, {0, 1}}};
    if (n % 2 == 0) return {{{1, n / 2}, {0, 1}}};
    return {{{1, (n + 1) / 2}, {1, (n - 1) / 2}}};
}

// covering of the isometry-group torus used to split off the base rotations;
// determinant +-n
inline Mat2 covering_matrix(int n) {
    if (n < 1) throw BadInput("covering_matrix: n must be >= 1");
    if (n % 2 == 0) return {{{n / 2, n / 2}, {1, -1}}};
    return {{{(n + 1) / 2, (n - 1) / 2}, {(n - 1) / 2, (n + 1) / 2}}};
}

}  // namespace ruled
