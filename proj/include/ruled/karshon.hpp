#pragma once

#include <optional>
#include <sstream>
#include <vector>

#include "ruled/polygon.hpp"

/*
 * Labeled-graph invariant classifying Hamiltonian circle actions on compact
 * symplectic four-manifolds.  For a circle inside the toric torus the graph
 * is read off the moment polygon: the moment map of the circle is the
 * pairing with its direction vector, extreme fixed components are either a
 * polygon edge on which the pairing is constant (a fixed sphere labeled by
 * its affine length) or a vertex (isolated point labeled by its two weight
 * pairings), and all other vertices are interior isolated fixed points.
 * Levels are normalized so the minimum is 0, matching the additive-constant
 * freedom of the moment map.
 */

namespace ruled {

struct CircleAction {
    Vec2 dir{0, 1};
    enum class Basis { moment, standard } basis = Basis::moment;
};

struct ExtremeComponent {
    Rational level;
    bool surface = false;
    Rational affine_length = 0;        // when surface
    std::array<long long, 2> weights{0, 0};  // when isolated, sorted ascending

    bool operator==(const ExtremeComponent&) const = default;
};

struct InteriorFixedPoint {
    Rational level;
    std::array<long long, 2> weights{0, 0};  // sorted ascending

    bool operator==(const InteriorFixedPoint&) const = default;
    bool operator<(const InteriorFixedPoint& o) const {
        return level != o.level ? level < o.level : weights < o.weights;
    }
};

struct KarshonGraph {
    ExtremeComponent minimum;
    ExtremeComponent maximum;
    std::vector<InteriorFixedPoint> interior;  // sorted

    bool operator==(const KarshonGraph&) const = default;
};

inline std::string render(const KarshonGraph& g) {
    auto comp = [](const ExtremeComponent& c) {
        std::ostringstream os;
        os << "level " << to_string(c.level) << ": ";
        if (c.surface)
            os << "fixed surface, affine length " << to_string(c.affine_length);
        else
            os << "isolated point, weights {" << c.weights[0] << ", " << c.weights[1] << "}";
        return os.str();
    };
    std::ostringstream os;
    os << "min    " << comp(g.minimum) << "\n";
    for (const auto& p : g.interior)
        os << "fixed  level " << to_string(p.level) << ": isolated point, weights {" << p.weights[0]
           << ", " << p.weights[1] << "}\n";
    os << "max    " << comp(g.maximum);
    return os.str();
}

// direction in the moment-map basis; use standard_basis_change to convert
// standard-basis circles first
inline KarshonGraph karshon_invariant(const MomentPolygon& poly, const Vec2& dir) {
    if (!is_primitive(dir)) throw NonPrimitiveDirection("karshon_invariant: direction not primitive");
    auto weights = fixed_point_weights(poly);  // also certifies Delzant
    std::size_t n = poly.vertices.size();

    std::vector<Rational> level(n);
    for (std::size_t i = 0; i < n; ++i) level[i] = dot(poly.vertices[i], dir);
    Rational lo = level[0], hi = level[0];
    for (const auto& l : level) {
        if (l < lo) lo = l;
        if (l > hi) hi = l;
    }

    auto extreme_at = [&](const Rational& value) {
        std::vector<std::size_t> at;
        for (std::size_t i = 0; i < n; ++i)
            if (level[i] == value) at.push_back(i);
        ExtremeComponent c;
        c.level = value - lo;
        if (at.size() == 1) {
            std::size_t i = at[0];
            c.weights = {dot(weights[i].weights[0], dir), dot(weights[i].weights[1], dir)};
            if (c.weights[0] > c.weights[1]) std::swap(c.weights[0], c.weights[1]);
        } else if (at.size() == 2 &&
                   (at[1] == at[0] + 1 || (at[0] == 0 && at[1] == n - 1))) {
            std::size_t i = at[0], j = at[1];
            const Point2& v = poly.vertices[i];
            const Point2& w = poly.vertices[j];
            c.surface = true;
            c.affine_length = primitive_direction({w[0] - v[0], w[1] - v[1]}).second;
        } else {
            throw BadInput("karshon_invariant: extreme level set is not a vertex or an edge");
        }
        return c;
    };

    KarshonGraph g;
    g.minimum = extreme_at(lo);
    g.maximum = extreme_at(hi);
    for (std::size_t i = 0; i < n; ++i) {
        if (level[i] == lo || level[i] == hi) continue;
        InteriorFixedPoint p;
        p.level = level[i] - lo;
        p.weights = {dot(weights[i].weights[0], dir), dot(weights[i].weights[1], dir)};
        if (p.weights[0] > p.weights[1]) std::swap(p.weights[0], p.weights[1]);
        g.interior.push_back(p);
    }
    std::sort(g.interior.begin(), g.interior.end());
    return g;
}

// circles on F_k and F_l (same parity) that generate equivalent Hamiltonian
// actions at every shared level; returned in the standard basis of the
// respective isometry groups
inline std::pair<CircleAction, CircleAction> shear_equivalent_circles(int k, int l,
                                                                      const Rational& lambda) {
    if (k < 0 || l < 0 || (k - l) % 2 != 0)
        throw BadInput("shear_equivalent_circles: k, l must be nonnegative with equal parity");
    moment_polygon({k, lambda});  // both surfaces must admit the level
    moment_polygon({l, lambda});
    auto standard_circle = [](int other) {
        return other % 2 == 0 ? Vec2{other / 2, 1} : Vec2{(other + 1) / 2, (other - 1) / 2};
    };
    CircleAction on_k{standard_circle(l), CircleAction::Basis::standard};
    CircleAction on_l{standard_circle(k), CircleAction::Basis::standard};
    return {on_k, on_l};
}

// Karshon graph of a standard-basis circle on F_n at level lambda
inline KarshonGraph karshon_graph_standard(int n, const Rational& lambda, const Vec2& std_dir) {
    Mat2 to_std = standard_basis_change(n);
    Vec2 moment_dir = mat2_apply(mat2_inverse_unimodular(to_std), std_dir);
    return karshon_invariant(moment_polygon({n, lambda}), moment_dir);
}

}  // namespace ruled
