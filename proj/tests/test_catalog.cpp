#include <catch2/catch_amalgamated.hpp>

#include "ruled/catalog.hpp"

using namespace ruled;

namespace {

const Vars& uvars() { return universal_ring().vars; }
const LaurentPoly UT = LaurentPoly::var(uvars(), 0);
const LaurentPoly UX = LaurentPoly::var(uvars(), 1);
const LaurentPoly UY = LaurentPoly::var(uvars(), 2);

const Vars stage_vars = Vars::of({"A", "X"});
const LaurentPoly SA = LaurentPoly::var(stage_vars, 0);
const LaurentPoly SA2 = LaurentPoly::var(stage_vars, 0, 2);
const LaurentPoly SX = LaurentPoly::var(stage_vars, 1);

const ModuleClosureEntry* find_entry(const ModuleClosureReport& r, std::size_t i, std::size_t j) {
    for (const auto& e : r.entries)
        if (e.i == i && e.j == j) return &e;
    return nullptr;
}

}  // namespace

TEST_CASE("stratum index brackets the level") {
    REQUIRE(top_stratum_index(SurfaceFamily::untwisted, Rational(1, 2)) == 0);
    REQUIRE(top_stratum_index(SurfaceFamily::untwisted, Rational(1)) == 0);
    REQUIRE(top_stratum_index(SurfaceFamily::untwisted, Rational(3, 2)) == 1);
    REQUIRE(top_stratum_index(SurfaceFamily::twisted, Rational(2)) == 1);
    REQUIRE(top_stratum_index(SurfaceFamily::twisted, Rational(7, 3)) == 2);
    REQUIRE(top_stratum_index(SurfaceFamily::twisted, Rational(5)) == 4);
    REQUIRE_THROWS_AS(top_stratum_index(SurfaceFamily::untwisted, Rational(0)), BadInput);
    REQUIRE_THROWS_AS(top_stratum_index(SurfaceFamily::twisted, Rational(-2)), BadInput);
}

TEST_CASE("strata tables") {
    Stratification u = strata(SurfaceFamily::untwisted, Rational(5, 2));
    REQUIRE(u.l == 2);
    REQUIRE(u.strata.size() == 3);
    REQUIRE(u.strata[0].stage_n == 0);
    REQUIRE(u.strata[0].codim == 0);
    REQUIRE(u.strata[0].isometry == "SO(3) x SO(3)");
    REQUIRE(u.strata[1].stage_n == 2);
    REQUIRE(u.strata[1].codim == 2);
    REQUIRE(u.strata[1].isometry == "S^1 x SO(3)");
    REQUIRE(u.strata[2].codim == 6);
    REQUIRE(u.next_stage == 6);
    REQUIRE(u.link_dim == 9);
    REQUIRE(u.euler_degree == 10);
    REQUIRE_FALSE(u.strata[0].swap_extension);
    // the euler class of the link has exactly the codimension degree
    REQUIRE(euler_class(u.next_stage).poly.weighted_degree({2, 4}) == u.euler_degree);

    Stratification w = strata(SurfaceFamily::twisted, Rational(3));
    REQUIRE(w.l == 2);
    REQUIRE(w.strata[0].stage_n == 1);
    REQUIRE(w.strata[1].stage_n == 3);
    REQUIRE(w.strata[1].codim == 4);
    REQUIRE(w.strata[2].codim == 8);
    REQUIRE(w.next_stage == 7);
    REQUIRE(w.link_dim == 11);
    REQUIRE(w.euler_degree == 12);
    for (const auto& s : w.strata) REQUIRE(s.isometry == "U(2)");

    REQUIRE(strata(SurfaceFamily::untwisted, Rational(1)).strata[0].swap_extension);
    REQUIRE_FALSE(strata(SurfaceFamily::untwisted, Rational(1, 2)).strata[0].swap_extension);
    REQUIRE_FALSE(strata(SurfaceFamily::untwisted, Rational(2)).strata[0].swap_extension);
    REQUIRE_FALSE(strata(SurfaceFamily::twisted, Rational(1)).strata[0].swap_extension);
}

TEST_CASE("isometry groups by stage") {
    REQUIRE(isometry_group(0).name == "SO(3) x SO(3)");
    REQUIRE(isometry_group(4).name == "S^1 x SO(3)");
    REQUIRE(isometry_group(7).name == "U(2)");
    REQUIRE(isometry_group(1).kind == IsometryKind::unitary);
    REQUIRE(isometry_group(2).kind == IsometryKind::circle_times_rotations);
    REQUIRE_THROWS_AS(isometry_group(-1), BadInput);

    IsometryGroup g0 = isometry_group(0);
    REQUIRE(g0.rational.degrees == std::vector<int>{4, 4});
    REQUIRE(g0.mod2.degrees == std::vector<int>{2, 3, 2, 3});
    REQUIRE(hilbert_series(g0.mod2, 6).dims == std::vector<long long>{1, 0, 2, 2, 3, 4, 7});

    IsometryGroup g2 = isometry_group(2);
    REQUIRE(g2.rational.degrees == std::vector<int>{2, 4});
    REQUIRE(g2.mod2.degrees == std::vector<int>{2, 2, 3});
    REQUIRE(hilbert_series(g2.mod2, 6).dims == std::vector<long long>{1, 0, 2, 1, 3, 2, 5});

    IsometryGroup g3 = isometry_group(3);
    REQUIRE(g3.rational.degrees == std::vector<int>{2, 4});
    REQUIRE(hilbert_series(g3.mod2, 8).dims ==
            std::vector<long long>{1, 0, 1, 0, 2, 0, 2, 0, 3});
}

TEST_CASE("circle restrictions") {
    Vars tv = Vars::of({"t"});
    LaurentPoly t = LaurentPoly::var(tv, 0);
    LaurentPoly t2 = LaurentPoly::var(tv, 0, 2);

    RingMap c1 = circle_pullback(isometry_group(1), 2, 1);
    REQUIRE(c1.images[0] == Rational(3) * t);
    REQUIRE(c1.images[1] == Rational(2) * t2);

    RingMap c4 = circle_pullback(isometry_group(4), 0, 1);
    REQUIRE(c4.images[0].is_zero());
    REQUIRE(c4.images[1] == t2);

    // on the stage-0 group the second coordinate drives the X0 factor
    RingMap c0 = circle_pullback(isometry_group(0), 1, 2);
    REQUIRE(c0.images[0] == Rational(4) * t2);
    REQUIRE(c0.images[1] == t2);

    for (int n : {0, 3, 6}) {
        RingMap z = circle_pullback(isometry_group(n), 0, 0);
        for (const auto& im : z.images) REQUIRE(im.is_zero());
    }
}

TEST_CASE("stage restrictions of the universal generators") {
    RingMap p0 = psi_star(0);
    REQUIRE(p0.images[0].is_zero());
    REQUIRE(p0.images[1] == LaurentPoly::var(Vars::of({"X0", "Y0"}), 0));
    REQUIRE(p0.images[2] == LaurentPoly::var(Vars::of({"X0", "Y0"}), 1));

    RingMap p1 = psi_star(1);
    REQUIRE(p1.images[0] == SA);
    REQUIRE(p1.images[1] == SX);
    REQUIRE(p1.images[2].is_zero());

    RingMap p2 = psi_star(2);
    REQUIRE(p2.images[0] == SA);
    REQUIRE(p2.images[1] == SX);
    REQUIRE(p2.images[2] == SA2 + SX);

    RingMap p3 = psi_star(3);
    REQUIRE(p3.images[0] == Rational(3) * SA);
    REQUIRE(p3.images[1] == Rational(2) * SA2);
    REQUIRE(p3.images[2] == SX);

    RingMap p4 = psi_star(4);
    REQUIRE(p4.images[0] == Rational(2) * SA);
    REQUIRE(p4.images[1] == SX);
    REQUIRE(p4.images[2] == SA2 + Rational(4) * SX);

    RingMap p5 = psi_star(5);
    REQUIRE(p5.images[0] == Rational(5) * SA);
    REQUIRE(p5.images[1] == Rational(6) * SA2 - Rational(2) * SX);
    REQUIRE(p5.images[2] == Rational(3) * SX);

    REQUIRE_THROWS_AS(psi_star(-1), BadInput);
}

TEST_CASE("kernel generators") {
    REQUIRE(kernel_generator(0) == UT);
    REQUIRE(kernel_generator(2) == UX - UY + UT * UT);
    REQUIRE(kernel_generator(3) == Rational(9) * UX - Rational(2) * (UT * UT));
    REQUIRE(kernel_generator(4) == Rational(16) * UX - Rational(4) * UY + UT * UT);
    REQUIRE(kernel_generator(5) ==
            Rational(75) * UX + Rational(50) * UY - Rational(18) * (UT * UT));
    for (int n = 0; n <= 10; ++n)
        REQUIRE(psi_star(n).apply(kernel_generator(n)).is_zero());
    REQUIRE_THROWS_AS(kernel_generator(-1), BadInput);
}

TEST_CASE("kernel generators span the kernels degreewise") {
    for (int n = 0; n <= 8; ++n)
        REQUIRE(kernel_matches_ideal(psi_star(n), {kernel_generator(n)}, 20));
}

TEST_CASE("derived restrictions match the catalog") {
    for (int n = 2; n <= 12; ++n) {
        RingMap d = derive_psi_star(n);
        RingMap p = psi_star(n);
        for (std::size_t i = 0; i < 3; ++i) REQUIRE(d.images[i] == p.images[i]);
    }
    REQUIRE_THROWS_AS(derive_psi_star(1), BadInput);
}

TEST_CASE("odd stratum coefficients") {
    for (int k = 0; k <= 6; ++k) {
        OddStratumCoefficients c = odd_stratum_coefficients(k);
        REQUIRE(c.multiplier == Rational(2 * k + 1));
        REQUIRE(c.offset == Rational((long long)k * (k + 1), 2));
    }
    REQUIRE(odd_stratum_coefficients(1).multiplier == Rational(3));
    REQUIRE(odd_stratum_coefficients(1).offset == Rational(1));
    REQUIRE(odd_stratum_coefficients(3).multiplier == Rational(7));
    REQUIRE(odd_stratum_coefficients(3).offset == Rational(6));
    REQUIRE_THROWS_AS(odd_stratum_coefficients(-1), BadInput);
}

TEST_CASE("relation tower factors through the kernel generators") {
    REQUIRE(relation_polynomial(0, SurfaceFamily::untwisted).polynomial == UT);
    RelationData u1 = relation_polynomial(1, SurfaceFamily::untwisted);
    REQUIRE(u1.polynomial == UT * (UX - UY + UT * UT));
    REQUIRE(u1.polynomial.weighted_degree({2, 4, 4}) == 6);
    REQUIRE(relation_polynomial(0, SurfaceFamily::twisted).polynomial == -UY);
    REQUIRE(relation_polynomial(1, SurfaceFamily::twisted).polynomial ==
            -UY * (Rational(9) * UX - Rational(2) * (UT * UT)));

    for (SurfaceFamily family : {SurfaceFamily::untwisted, SurfaceFamily::twisted}) {
        for (int l = 0; l <= 5; ++l) {
            RelationData r = relation_polynomial(l, family);
            REQUIRE((int)r.factors.size() == l + 1);
            LaurentPoly prod = LaurentPoly::constant(uvars(), 1);
            for (const auto& f : r.factors) {
                REQUIRE(f.scalar_vs_kernel == Rational(1));
                REQUIRE(f.factor == kernel_generator(f.stage_n));
                prod = prod * f.factor;
            }
            REQUIRE(r.polynomial == prod);
            if (l >= 1) {
                int m = stage_label(family, l);
                REQUIRE(r.polynomial ==
                        relation_polynomial(l - 1, family).polynomial * kernel_generator(m));
            }
        }
    }
    REQUIRE_THROWS_AS(relation_polynomial(-1, SurfaceFamily::twisted), BadInput);
}

TEST_CASE("change of variables straightens the twisted factors") {
    ChangeOfVariables cv = twisted_change_of_variables(8);
    REQUIRE(cv.verified_through == 8);
    REQUIRE(cv.images[0] == UT);
    // the first factor is -Y in both coordinate systems
    LaurentPoly rhs = Rational(1, 32) * (cv.images[1] - cv.images[2] - UT * UT);
    REQUIRE(rhs == -UY);
    REQUIRE(relation_polynomial(0, SurfaceFamily::twisted).polynomial == rhs);
    REQUIRE_THROWS_AS(twisted_change_of_variables(-1), BadInput);
}

TEST_CASE("gluing squares certify euler divisibility") {
    GluingSquare s1 = gluing_square(SurfaceFamily::untwisted, 1);
    REQUIRE(s1.stage == 2);
    REQUIRE(s1.euler_multiple == LaurentPoly::constant(s1.euler_multiple.vars, 1));

    GluingSquare s2 = gluing_square(SurfaceFamily::untwisted, 2);
    REQUIRE(s2.stage == 4);
    REQUIRE(s2.euler_multiple == LaurentPoly::constant(s2.euler_multiple.vars, 6));

    GluingSquare t1 = gluing_square(SurfaceFamily::twisted, 1);
    REQUIRE(t1.stage == 3);
    REQUIRE(t1.euler_multiple == LaurentPoly::constant(t1.euler_multiple.vars, -1));

    GluingSquare t2 = gluing_square(SurfaceFamily::twisted, 2);
    REQUIRE(t2.stage == 5);
    REQUIRE(t2.euler_multiple == LaurentPoly::constant(t2.euler_multiple.vars, 6));

    for (SurfaceFamily family : {SurfaceFamily::untwisted, SurfaceFamily::twisted})
        for (int l = 3; l <= 5; ++l) REQUIRE_NOTHROW(gluing_square(family, l));

    REQUIRE_THROWS_AS(gluing_square(SurfaceFamily::untwisted, 0), BadInput);
    REQUIRE_THROWS_AS(gluing_square(SurfaceFamily::untwisted, 1, CoeffTag::F2), BadInput);
}

TEST_CASE("structure-space dimensions over Q") {
    BgData u1 = bg_rational_presentation(SurfaceFamily::untwisted, Rational(3, 2), 10);
    REQUIRE(u1.l == 1);
    REQUIRE(u1.hilbert.dims == std::vector<long long>{1, 0, 1, 0, 3, 0, 2, 0, 5, 0, 3});
    REQUIRE(u1.hilbert.numerator == Poly1{1, 0, 0, 0, 0, 0, -1});
    REQUIRE(u1.hilbert.denominator == Poly1{1, 0, -1, 0, -2, 0, 2, 0, 1, 0, -1});

    BgData w1 = bg_rational_presentation(SurfaceFamily::twisted, Rational(2), 8);
    REQUIRE(w1.l == 1);
    REQUIRE(w1.hilbert.dims == std::vector<long long>{1, 0, 1, 0, 3, 0, 3, 0, 5});

    BgData w0 = bg_rational_presentation(SurfaceFamily::twisted, Rational(1, 2), 8);
    REQUIRE(w0.l == 0);
    REQUIRE(w0.hilbert.dims == hilbert_series(isometry_group(1).rational, 8).dims);

    // every construction cross-checks closed form, stage tables and gluing square
    for (int l = 0; l <= 5; ++l) {
        Rational lam(2 * l + 1, 2);
        BgData u = bg_rational_presentation(SurfaceFamily::untwisted, lam, 26);
        REQUIRE(u.l == l);
        if (l >= 1) REQUIRE(u.hilbert.dims[4] == 3);
        BgData w = bg_rational_presentation(SurfaceFamily::twisted, lam, 26);
        REQUIRE(w.l == l);
    }
}

TEST_CASE("stage tables by field") {
    REQUIRE(bg_groups_dims(SurfaceFamily::twisted, Rational(1, 2), CoeffTag::Q, 8) ==
            std::vector<long long>{1, 0, 1, 0, 2, 0, 2, 0, 3});
    REQUIRE(bg_groups_dims(SurfaceFamily::untwisted, Rational(3, 2), CoeffTag::Q, 10)[4] == 3);

    std::vector<long long> uf = bg_groups_dims(SurfaceFamily::untwisted, Rational(3, 2),
                                               CoeffTag::F2, 10);
    REQUIRE(uf[2] == 3);
    REQUIRE(uf[3] == 2);
    REQUIRE(uf[4] == 5);

    REQUIRE_THROWS_AS(bg_groups_dims(SurfaceFamily::twisted, Rational(1), CoeffTag::F3, 8),
                      BadInput);
    REQUIRE_THROWS_AS(bg_groups_dims(SurfaceFamily::untwisted, Rational(-1), CoeffTag::Q, 8),
                      BadInput);
}

TEST_CASE("mod-2 dimensions agree between independent routes") {
    for (int l = 0; l <= 5; ++l) {
        Rational lam(2 * l + 1, 2);
        REQUIRE(bg_mod2_dims(SurfaceFamily::twisted, lam, 20) ==
                bg_groups_dims(SurfaceFamily::twisted, lam, CoeffTag::F2, 20));
        REQUIRE(bg_mod2_dims(SurfaceFamily::untwisted, lam, 20) ==
                bg_groups_dims(SurfaceFamily::untwisted, lam, CoeffTag::F2, 20));
    }
    // twisted quotient presentations have field-independent dimensions
    for (int l = 0; l <= 4; ++l)
        REQUIRE(hilbert_series(bg_quotient(SurfaceFamily::twisted, l, CoeffTag::F2), 20).dims ==
                hilbert_series(bg_quotient(SurfaceFamily::twisted, l, CoeffTag::Q), 20).dims);
}

TEST_CASE("connectivity across levels") {
    ConnectivityResult c = connectivity_check(SurfaceFamily::untwisted, Rational(3, 2),
                                              Rational(5, 2), CoeffTag::Q, 10);
    REQUIRE(c.agree);
    REQUIRE(c.stage == 4);
    REQUIRE(c.checked_through == 4);
    // the agreement genuinely stops above the bound
    REQUIRE(hilbert_series(bg_quotient(SurfaceFamily::untwisted, 1), 6).dims[6] == 2);
    REQUIRE(hilbert_series(bg_quotient(SurfaceFamily::untwisted, 2), 6).dims[6] == 3);

    ConnectivityResult t = connectivity_check(SurfaceFamily::twisted, Rational(1, 2),
                                              Rational(3, 2), CoeffTag::Q, 10);
    REQUIRE(t.agree);
    REQUIRE(t.stage == 3);
    REQUIRE(t.checked_through == 2);

    REQUIRE(connectivity_check(SurfaceFamily::twisted, Rational(3, 2), Rational(4), CoeffTag::F2,
                               12)
                .agree);
    REQUIRE(connectivity_check(SurfaceFamily::untwisted, Rational(2), Rational(2), CoeffTag::Q,
                               12)
                .agree);
    REQUIRE_THROWS_AS(
        connectivity_check(SurfaceFamily::twisted, Rational(2), Rational(1), CoeffTag::Q, 10),
        BadInput);
}

TEST_CASE("half-integral module basis") {
    const Vars& v = xyz_vars();
    LaurentPoly x = LaurentPoly::var(v, 0);
    LaurentPoly y = LaurentPoly::var(v, 1);
    LaurentPoly z = LaurentPoly::var(v, 2);

    std::vector<LaurentPoly> basis = module_basis_polys(7);
    REQUIRE(basis[0] == LaurentPoly::constant(v, 1));
    REQUIRE(basis[1] == z);
    REQUIRE(basis[2] == Rational(1, 2) * (z * z));
    REQUIRE(basis[3] == Rational(1, 6) * (z * (z * z + x - y)));
    REQUIRE(basis[4] == Rational(1, 24) * (z * z * (z * z + x - y)));
    for (std::size_t i = 0; i < basis.size(); ++i)
        REQUIRE(basis[i].weighted_degree({4, 4, 2}) == 2 * (long long)i);

    for (int l = 0; l <= 4; ++l) {
        ModuleBasisData data = half_integral_module_basis(l, 24);
        REQUIRE((int)data.basis.size() == 2 * l + 1);
        REQUIRE(data.names.front() == "a0");
        REQUIRE(data.dims == bg_groups_dims(SurfaceFamily::untwisted, Rational(2 * l + 1, 2),
                                            CoeffTag::Q, 24));
        if (l >= 1) {
            REQUIRE(data.names[1] == "b0");
            REQUIRE(data.names[2] == "a1");
            const ModuleClosureEntry* e = find_entry(data.closure, 1, 1);
            REQUIRE(e != nullptr);
            // b0^2 = 2 a1 in the quotient
            REQUIRE(e->expansion.coefficients[2] == LaurentPoly::constant(v, 2));
            for (std::size_t c = 0; c < e->expansion.coefficients.size(); ++c)
                if (c != 2) REQUIRE(e->expansion.coefficients[c].is_zero());
        }
    }
    REQUIRE_THROWS_AS(half_integral_module_basis(-1), BadInput);
}

TEST_CASE("odd-primes model verification") {
    AwayFromTwoData d = away_from_two_verification();
    REQUIRE(d.ansatz_v == Rational(1));
    REQUIRE(d.ansatz_u2 == Rational(0));

    const Vars& V = uvw_vars();
    LaurentPoly u = LaurentPoly::var(V, 0);
    LaurentPoly v = LaurentPoly::var(V, 1);
    LaurentPoly w = LaurentPoly::var(V, 2);
    REQUIRE(d.f[0] == w);
    REQUIRE(d.g[1] == Rational(1, 2) * (w * w + u * w + Rational(2) * (v * w)));
    REQUIRE(d.fg_basis.size() == 20);
    REQUIRE(d.ab_basis.size() == 20);
    REQUIRE(d.ab_basis[2] == Rational(1, 2) * (w * w));
    for (std::size_t i = 0; i < d.fg_basis.size(); ++i) {
        REQUIRE(var_degree(d.fg_basis[i], 2) == (long long)i);
        REQUIRE(d.fg_basis[i].weighted_degree({2, 2, 2}) == 2 * (long long)i);
    }

    // f0 f0 = 2 g1 - (u + 2v) f0, integrally
    const ModuleClosureEntry* fg = find_entry(d.fg_closure, 1, 1);
    REQUIRE(fg != nullptr);
    REQUIRE(fg->expansion.coefficients[2] == LaurentPoly::constant(V, 2));
    REQUIRE(fg->expansion.coefficients[1] == -(u + Rational(2) * v));
    REQUIRE(fg->expansion.coefficients[0].is_zero());

    // in the invariant basis the same square is 2 a1 on the nose
    const ModuleClosureEntry* ab = find_entry(d.ab_closure, 1, 1);
    REQUIRE(ab != nullptr);
    REQUIRE(ab->expansion.coefficients[2] == LaurentPoly::constant(V, 2));
    REQUIRE(ab->expansion.coefficients[1].is_zero());

    auto forced = solve_involution_ansatz();
    REQUIRE(forced.first == Rational(1));
    REQUIRE(forced.second == Rational(0));
}

TEST_CASE("two-strata twisted space") {
    TwistedTwoStrata d = twisted_two_strata(16);
    RingMap p1 = psi_star(1), p3 = psi_star(3);
    REQUIRE(d.generators.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(d.generators[i].first == p1.images[i]);
        REQUIRE(d.generators[i].second == p3.images[i]);
    }
    REQUIRE(d.extra_integral.first.is_zero());
    REQUIRE(d.extra_integral.second == SA * SX);
    REQUIRE(d.relation == UY * (Rational(9) * UX - Rational(2) * (UT * UT)));
    REQUIRE(d.dims ==
            std::vector<long long>{1, 0, 1, 0, 3, 0, 3, 0, 5, 0, 5, 0, 7, 0, 7, 0, 9});
    REQUIRE(d.fiber == d.dims);
}
