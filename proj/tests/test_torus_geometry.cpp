#include <catch2/catch_amalgamated.hpp>

#include "ruled/polygon.hpp"

using namespace ruled;

namespace {

bool has_weights(const VertexWeights& vw, Vec2 a, Vec2 b) {
    return (vw.weights[0] == a && vw.weights[1] == b) || (vw.weights[0] == b && vw.weights[1] == a);
}

}  // namespace

TEST_CASE("derived level and reduction data") {
    CHECK(HirzebruchParams{0, 1}.mu() == 1);
    CHECK(HirzebruchParams{1, 1}.mu() == 2);
    CHECK(HirzebruchParams{2, 2}.mu() == 3);
    CHECK(HirzebruchParams{3, Rational(5, 2)}.mu() == Rational(9, 2));

    auto rd = reduction_data(1, 1);
    CHECK(rd.inclusion_rows == std::vector<Vec2>{{1, 1}, {0, 1}, {1, 0}, {1, 0}});
    CHECK(rd.level == Point2{2, 1});

    auto rd4 = reduction_data(4, Rational(7, 2));
    CHECK(rd4.inclusion_rows[0] == Vec2{4, 1});
    CHECK(rd4.level == Point2{Rational(11, 2), 1});
}

TEST_CASE("moment polygon vertices and degeneration") {
    auto p = moment_polygon({0, 1});
    CHECK(p.vertices == std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});

    auto q = moment_polygon({2, 2});
    CHECK(q.vertices == std::vector<Point2>{{0, 0}, {1, 0}, {1, 3}, {0, 1}});

    CHECK_THROWS_AS(moment_polygon({2, 1}), DegeneratePolygon);   // mu = n
    CHECK_THROWS_AS(moment_polygon({5, 2}), DegeneratePolygon);   // mu = 5 = n
    CHECK_THROWS_AS(moment_polygon({1, Rational(0)}), BadInput);  // lambda must be > 0
}

TEST_CASE("fixed point weights match the isotropy table") {
    for (int n = 0; n <= 12; ++n) {
        for (Rational lambda : {Rational(n + 1), Rational(2 * n + 1, 2), Rational(2 * n + 3, 2)}) {
            HirzebruchParams params{n, lambda};
            if (params.mu() <= n) continue;
            auto w = fixed_point_weights(moment_polygon(params));
            REQUIRE(w.size() == 4);
            CHECK(has_weights(w[0], {1, 0}, {0, 1}));        // A: x, y
            CHECK(has_weights(w[1], {-1, 0}, {0, 1}));       // B: 1/x, y
            CHECK(has_weights(w[2], {-1, -n}, {0, -1}));     // C: 1/(x y^n), 1/y
            CHECK(has_weights(w[3], {1, n}, {0, -1}));       // D: x y^n, 1/y
        }
    }
}

TEST_CASE("non-unimodular corner is rejected") {
    MomentPolygon bad;
    bad.vertices = {Point2{0, 0}, Point2{1, 0}, Point2{2, 2}, Point2{0, 1}};
    CHECK_THROWS_AS(fixed_point_weights(bad), NotDelzant);
}

TEST_CASE("basis change matrices") {
    CHECK(standard_basis_change(0) == Mat2{{{-1, 0}, {0, 1}}});
    CHECK(standard_basis_change(4) == Mat2{{{1, 2}, {0, 1}}});
    CHECK(standard_basis_change(3) == Mat2{{{1, 2}, {1, 1}}});
    for (int n = 0; n <= 12; ++n) {
        long long d = det2(standard_basis_change(n));
        CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("covering matrices and determinants") {
    CHECK(covering_matrix(3) == Mat2{{{2, 1}, {1, 2}}});
    CHECK(covering_matrix(4) == Mat2{{{2, 2}, {1, -1}}});
    for (int n = 1; n <= 12; ++n) {
        long long d = det2(covering_matrix(n));
        CHECK((d == n || d == -n));
    }
    CHECK_THROWS_AS(covering_matrix(0), BadInput);
}

TEST_CASE("basis change sends shared moment circles to the standard pair") {
    // the circle common to F_k and F_l sits at ((l-k)/2, 1) in the moment
    // basis of F_k; its standard form is (l/2, 1) resp. ((l+1)/2, (l-1)/2),
    // with the k = 0 surface identifying (a, 1) with (-a, 1)
    for (int k = 0; k <= 8; ++k) {
        for (int l = k % 2; l <= 8; l += 2) {
            Vec2 moment{(l - k) / 2, 1};
            Vec2 got = mat2_apply(standard_basis_change(k), moment);
            Vec2 expected = l % 2 == 0 ? Vec2{l / 2, 1} : Vec2{(l + 1) / 2, (l - 1) / 2};
            if (k == 0 && got[0] == -expected[0] && got[1] == expected[1]) got[0] = -got[0];
            CHECK(got == expected);
        }
    }
}
