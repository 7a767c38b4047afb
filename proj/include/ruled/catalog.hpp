#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ruled/graded.hpp"
#include "ruled/karshon.hpp"
#include "ruled/localization.hpp"

/*
 * The concrete rings and maps attached to the two ruled families.  Stages are
 * indexed by the surfaces F_n: even n in the untwisted family, odd n in the
 * twisted one.  Each stage carries the classifying-space cohomology of its
 * isometry group; the universal ring Q[T,X,Y] restricts to every stage, and
 * crossing an integer level glues one new stage onto the structure space.
 * Every value returned here is exact and cross-checked on the way out;
 * inconsistencies throw instead of propagating.
 */

namespace ruled {

// ---- stage bookkeeping ----

// l with l < lambda <= l+1: the index of the deepest stratum present
inline int top_stratum_index(SurfaceFamily family, const Rational& lambda) {
    (void)family;  // both families share the bounds
    if (lambda <= 0) throw BadInput("top_stratum_index: lambda must be positive");
    Int num = numerator(lambda), den = denominator(lambda);
    Int c = (num + den - 1) / den;
    return (int)(long long)c - 1;
}

inline int stage_label(SurfaceFamily family, int k) {
    return family == SurfaceFamily::untwisted ? 2 * k : 2 * k + 1;
}

// ---- isometry groups and their classifying-space presentations ----

enum class IsometryKind { two_rotation_factors, circle_times_rotations, unitary };

struct IsometryGroup {
    int stage_n = 0;
    IsometryKind kind = IsometryKind::unitary;
    std::string name;
    GradedRingPresentation rational;  // cohomology of the classifying space over Q
    GradedRingPresentation mod2;      // ... over F2
};

inline IsometryGroup isometry_group(int n) {
    if (n < 0) throw BadInput("isometry_group: negative stage");
    IsometryGroup g;
    g.stage_n = n;
    std::string tag = " stage " + std::to_string(n);
    if (n == 0) {
        g.kind = IsometryKind::two_rotation_factors;
        g.name = "SO(3) x SO(3)";
        g.rational = {"B(SO(3) x SO(3))", Vars::of({"X0", "Y0"}), {4, 4}, {}, CoeffTag::Q};
        g.mod2 = {"B(SO(3) x SO(3)) mod 2", Vars::of({"w2", "w3", "w2'", "w3'"}), {2, 3, 2, 3},
                  {}, CoeffTag::F2};
    } else if (n % 2 == 0) {
        g.kind = IsometryKind::circle_times_rotations;
        g.name = "S^1 x SO(3)";
        g.rational = {"B(S^1 x SO(3))" + tag, Vars::of({"A", "X"}), {2, 4}, {}, CoeffTag::Q};
        g.mod2 = {"B(S^1 x SO(3))" + tag + " mod 2", Vars::of({"T", "w2", "w3"}), {2, 2, 3},
                  {}, CoeffTag::F2};
    } else {
        g.kind = IsometryKind::unitary;
        g.name = "U(2)";
        g.rational = {"B(U(2))" + tag, Vars::of({"A", "X"}), {2, 4}, {}, CoeffTag::Q};
        g.mod2 = {"B(U(2))" + tag + " mod 2", Vars::of({"A", "X"}), {2, 4}, {}, CoeffTag::F2};
    }
    return g;
}

// ---- stratification of the structure space ----

struct StratumInfo {
    int k = 0;        // stratum index; 0 is open and dense
    int stage_n = 0;  // surface label of the stage: 2k or 2k+1
    long long codim = 0;
    std::string isometry;
    bool swap_extension = false;  // the two stage-0 factors swap exactly at lambda == 1
};

struct Stratification {
    SurfaceFamily family = SurfaceFamily::untwisted;
    Rational lambda = 1;
    int l = 0;  // strata are U_0, ..., U_l
    std::vector<StratumInfo> strata;
    int next_stage = 0;           // stage glued in when lambda crosses l+1
    long long link_dim = 0;       // dimension of the gluing link sphere
    long long euler_degree = 0;   // degree of its euler class == codim of the new stratum
};

inline Stratification strata(SurfaceFamily family, const Rational& lambda) {
    Stratification s;
    s.family = family;
    s.lambda = lambda;
    s.l = top_stratum_index(family, lambda);
    for (int k = 0; k <= s.l; ++k) {
        StratumInfo info;
        info.k = k;
        info.stage_n = stage_label(family, k);
        if (k > 0) info.codim = family == SurfaceFamily::untwisted ? 4 * k - 2 : 4 * k;
        info.isometry = isometry_group(info.stage_n).name;
        info.swap_extension =
            family == SurfaceFamily::untwisted && k == 0 && lambda == Rational(1);
        s.strata.push_back(info);
    }
    s.next_stage = stage_label(family, s.l + 1);
    s.link_dim = 2LL * s.next_stage - 3;
    s.euler_degree = 2LL * s.next_stage - 2;
    return s;
}

// ---- circle restrictions ----

/*
 * Restriction along the circle with standard coordinates (a, b) inside the
 * stage group.  On S^1 x SO(3) the coordinates act on the named factors; on
 * U(2) they are the two diagonal weights; on SO(3) x SO(3) the first
 * coordinate rotates the factor carrying Y0, the second the one carrying X0.
 */
inline RingMap circle_pullback(const IsometryGroup& g, long long a, long long b) {
    GradedRingPresentation target{"B(S^1)", Vars::of({"t"}), {2}, {}, CoeffTag::Q};
    LaurentPoly t = LaurentPoly::var(target.vars, 0);
    LaurentPoly t2 = LaurentPoly::var(target.vars, 0, 2);
    std::vector<LaurentPoly> images;
    switch (g.kind) {
        case IsometryKind::circle_times_rotations:
            images = {Rational(a) * t, Rational(b * b) * t2};
            break;
        case IsometryKind::unitary:
            images = {Rational(a + b) * t, Rational(a * b) * t2};
            break;
        case IsometryKind::two_rotation_factors:
            images = {Rational(b * b) * t2, Rational(a * a) * t2};
            break;
    }
    RingMap m{g.rational, target, images};
    m.validate();
    return m;
}

// ---- the universal ring and its stage restrictions ----

// generators T (degree 2) and X, Y (degree 4) restricting to every stage
inline const GradedRingPresentation& universal_ring() {
    static const GradedRingPresentation P{"universal", Vars::of({"T", "X", "Y"}), {2, 4, 4},
                                          {}, CoeffTag::Q};
    return P;
}

/*
 * Restriction of the universal generators to stage n.  The normalization is
 * pinned at stages 0 and 1 (X and Y restrict to the stage generators, T to
 * the degree-2 one) together with the distinguished circles of stages 2 and
 * 3; derive_psi_star below recovers the same maps from those inputs alone.
 */
inline RingMap psi_star(int n) {
    if (n < 0) throw BadInput("psi_star: negative stage");
    IsometryGroup g = isometry_group(n);
    const Vars& kv = g.rational.vars;
    std::vector<LaurentPoly> images;
    if (n == 0) {
        images = {LaurentPoly::zero(kv), LaurentPoly::var(kv, 0), LaurentPoly::var(kv, 1)};
    } else {
        LaurentPoly A = LaurentPoly::var(kv, 0);
        LaurentPoly A2 = LaurentPoly::var(kv, 0, 2);
        LaurentPoly X = LaurentPoly::var(kv, 1);
        long long nn = (long long)n * n;
        if (n % 2 == 0) {
            images = {Rational(n, 2) * A, X, A2 + Rational(nn, 4) * X};
        } else {
            images = {Rational(n) * A,
                      Rational(nn - 1, 4) * A2 + (Rational(1) - Rational(nn - 1, 8)) * X,
                      Rational(nn - 1, 8) * X};
        }
    }
    RingMap m{universal_ring(), g.rational, images};
    m.validate();
    return m;
}

// generator of the kernel of psi_star(n) in the universal ring
inline LaurentPoly kernel_generator(int n) {
    if (n < 0) throw BadInput("kernel_generator: negative stage");
    const Vars& uv = universal_ring().vars;
    LaurentPoly T = LaurentPoly::var(uv, 0);
    LaurentPoly T2 = LaurentPoly::var(uv, 0, 2);
    LaurentPoly X = LaurentPoly::var(uv, 1);
    LaurentPoly Y = LaurentPoly::var(uv, 2);
    if (n == 0) return T;
    long long nn = (long long)n * n;
    if (n % 2 == 0) return Rational(nn * nn, 16) * X - Rational(nn, 4) * Y + T2;
    return Rational((nn - 1) * nn, 8) * (X + Y) - Rational(nn) * Y -
           Rational((nn - 1) * (nn - 1), 32) * T2;
}

namespace detail {

inline Rational coeff(const LaurentPoly& p, const Exponents& e) {
    auto it = p.terms.find(e);
    return it == p.terms.end() ? Rational(0) : it->second;
}

// one linear condition on the unknown stage restriction: a known map out of
// the stage ring, described by where A and X land, plus the values the
// universal generators must take there
struct StageConstraint {
    Rational p;             // target coefficient of the image of A
    Rational q;             // ... of A^2
    Rational r;             // ... of X
    Rational vT, vX, vY;    // required values of T, X, Y
};

inline StageConstraint circle_constraint(const IsometryGroup& unknown, const Vec2& on_unknown,
                                         const IsometryGroup& reference, const RingMap& psi_ref,
                                         const Vec2& on_reference) {
    StageConstraint c;
    RingMap pb = circle_pullback(unknown, on_unknown[0], on_unknown[1]);
    c.p = coeff(pb.images[0], {1});
    c.q = c.p * c.p;
    c.r = coeff(pb.images[1], {2});
    RingMap ref = circle_pullback(reference, on_reference[0], on_reference[1]);
    c.vT = coeff(ref.apply(psi_ref.images[0]), {1});
    c.vX = coeff(ref.apply(psi_ref.images[1]), {2});
    c.vY = coeff(ref.apply(psi_ref.images[2]), {2});
    return c;
}

// unknowns: images T = s0 A, X = s1 A^2 + s2 X, Y = s3 A^2 + s4 X
inline std::vector<Rational> solve_stage_constraints(const std::vector<StageConstraint>& cs) {
    Matrix<FieldQ> M((int)cs.size() * 3, 6);
    int row = 0;
    for (const auto& c : cs) {
        M.at(row, 0) = c.p;
        M.at(row, 5) = c.vT;
        ++row;
        M.at(row, 1) = c.q;
        M.at(row, 2) = c.r;
        M.at(row, 5) = c.vX;
        ++row;
        M.at(row, 3) = c.q;
        M.at(row, 4) = c.r;
        M.at(row, 5) = c.vY;
        ++row;
    }
    auto pivots = M.rref();
    std::vector<Rational> sol(5, Rational(0));
    std::vector<bool> pinned(5, false);
    int prow = 0;
    for (int p : pivots) {
        if (p == 5) throw CalcError("derive_psi_star: inconsistent constraints");
        sol[p] = M.at(prow, 5);
        pinned[p] = true;
        ++prow;
    }
    for (bool have : pinned)
        if (!have)
            throw UnderdeterminedSystem("derive_psi_star: a restriction coefficient stays free");
    return sol;
}

}  // namespace detail

/*
 * Recover psi_star(n) from first principles: circles shared with reference
 * stages pin every coefficient.  Stage 2 combines stage 0 with its own
 * distinguished circle (T, X, Y restrict there to t, 0, t^2); stage 3
 * combines stage 1 with the determinant-one subgroup (restriction 0, 0,
 * sigma); higher stages use the two smallest reference stages of their
 * parity.  Throws when the constraints fail to determine the map.
 */
inline RingMap derive_psi_star(int n) {
    if (n < 2) throw BadInput("derive_psi_star: requires n >= 2");
    IsometryGroup gu = isometry_group(n);
    Rational lambda = Rational(n, 2) + 1;
    std::vector<detail::StageConstraint> cs;
    auto add_pair = [&](int ref) {
        auto circles = shear_equivalent_circles(ref, n, lambda);
        cs.push_back(detail::circle_constraint(gu, circles.second.dir, isometry_group(ref),
                                               psi_star(ref), circles.first.dir));
    };
    if (n % 2 == 0) {
        add_pair(0);
        if (n == 2) {
            detail::StageConstraint c;
            RingMap pb = circle_pullback(gu, 1, 0);
            c.p = detail::coeff(pb.images[0], {1});
            c.q = c.p * c.p;
            c.r = detail::coeff(pb.images[1], {2});
            c.vT = 1;
            c.vX = 0;
            c.vY = 1;
            cs.push_back(c);
        } else {
            add_pair(2);
        }
    } else {
        add_pair(1);
        if (n == 3) {
            cs.push_back({Rational(0), Rational(0), Rational(1), Rational(0), Rational(0),
                          Rational(1)});
        } else {
            add_pair(3);
        }
    }
    auto sol = detail::solve_stage_constraints(cs);
    const Vars& kv = gu.rational.vars;
    LaurentPoly A = LaurentPoly::var(kv, 0);
    LaurentPoly A2 = LaurentPoly::var(kv, 0, 2);
    LaurentPoly X = LaurentPoly::var(kv, 1);
    RingMap m{universal_ring(), gu.rational,
              {sol[0] * A, sol[1] * A2 + sol[2] * X, sol[3] * A2 + sol[4] * X}};
    m.validate();
    return m;
}

// multiplier and offset of the stage-(2k+1) circle and spherical classes
// relative to the stage-1 ones, read off the restriction map
struct OddStratumCoefficients {
    Rational multiplier;  // coefficient of A in the image of T
    Rational offset;      // coefficient of X in the image of Y
};

inline OddStratumCoefficients odd_stratum_coefficients(int k) {
    if (k < 0) throw BadInput("odd_stratum_coefficients: negative index");
    RingMap psi = psi_star(2 * k + 1);
    return {detail::coeff(psi.images[0], {1, 0}), detail::coeff(psi.images[2], {0, 1})};
}

// ---- the relation tower ----

namespace detail {

inline LaurentPoly untwisted_factor(int i) {  // i^4 X - i^2 Y + T^2
    const Vars& uv = universal_ring().vars;
    long long ii = (long long)i * i;
    return Rational(ii * ii) * LaurentPoly::var(uv, 1) - Rational(ii) * LaurentPoly::var(uv, 2) +
           LaurentPoly::var(uv, 0, 2);
}

inline LaurentPoly twisted_factor(int k) {
    // (2k+1)^2 (k(k+1)/2 (X+Y) - Y) - k^2(k+1)^2/2 T^2
    const Vars& uv = universal_ring().vars;
    LaurentPoly U = LaurentPoly::var(uv, 1) + LaurentPoly::var(uv, 2);
    long long n = 2LL * k + 1;
    long long half = (long long)k * (k + 1) / 2;
    return Rational(n * n) * (Rational(half) * U - LaurentPoly::var(uv, 2)) -
           Rational((long long)k * k * (k + 1) * (k + 1), 2) *
               LaurentPoly::var(uv, 0, 2);
}

// the unique c with p == c * q
inline Rational proportionality(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) throw CalcError("proportionality: zero polynomial");
    const auto& [e0, c0] = *q.terms.begin();
    Rational c = coeff(p, e0) / c0;
    if (!(p == c * q))
        throw IdentityFailed("relation factor is not proportional to the stage kernel generator");
    return c;
}

}  // namespace detail

struct RelationFactor {
    int stage_n = 0;
    LaurentPoly factor;
    Rational scalar_vs_kernel;  // factor == scalar * kernel_generator(stage_n)
};

struct RelationData {
    SurfaceFamily family = SurfaceFamily::untwisted;
    int l = 0;
    LaurentPoly polynomial;
    std::vector<RelationFactor> factors;
};

/*
 * The stage-l relation of the structure-space cohomology: one factor per
 * stratum, each proportional to the kernel generator of its stage.  Factors
 * are kept exactly as the tower presents them; the proportionality scalar is
 * reported rather than normalized away.
 */
inline RelationData relation_polynomial(int l, SurfaceFamily family) {
    if (l < 0) throw BadInput("relation_polynomial: negative stage index");
    const Vars& uv = universal_ring().vars;
    RelationData out;
    out.family = family;
    out.l = l;
    out.polynomial = LaurentPoly::constant(uv, 1);
    if (family == SurfaceFamily::untwisted) {
        out.factors.push_back({0, LaurentPoly::var(uv, 0), Rational(0)});
        for (int i = 1; i <= l; ++i) out.factors.push_back({2 * i, detail::untwisted_factor(i), Rational(0)});
    } else {
        for (int k = 0; k <= l; ++k) out.factors.push_back({2 * k + 1, detail::twisted_factor(k), Rational(0)});
    }
    for (auto& f : out.factors) {
        f.scalar_vs_kernel = detail::proportionality(f.factor, kernel_generator(f.stage_n));
        out.polynomial = out.polynomial * f.factor;
    }
    return out;
}

struct ChangeOfVariables {
    std::vector<LaurentPoly> images;  // z, x, y written in T, X, Y
    int verified_through = 0;
};

/*
 * The substitution z = T, x = 4(X+Y) - T^2, y = 4(X+Y) + 32Y - 2T^2 turns
 * every twisted factor into (1/32)(-z^2 + (2k+1)^4 x - (2k+1)^2 y); checked
 * factor by factor through k_max.
 */
inline ChangeOfVariables twisted_change_of_variables(int k_max = 8) {
    if (k_max < 0) throw BadInput("twisted_change_of_variables: negative bound");
    const Vars& uv = universal_ring().vars;
    LaurentPoly T2 = LaurentPoly::var(uv, 0, 2);
    LaurentPoly U = LaurentPoly::var(uv, 1) + LaurentPoly::var(uv, 2);
    LaurentPoly z = LaurentPoly::var(uv, 0);
    LaurentPoly x = Rational(4) * U - T2;
    LaurentPoly y = Rational(4) * U + Rational(32) * LaurentPoly::var(uv, 2) - Rational(2) * T2;
    for (int k = 0; k <= k_max; ++k) {
        long long n = 2LL * k + 1;
        LaurentPoly rhs = Rational(1, 32) *
                          (Rational(n * n * n * n) * x - Rational(n * n) * y - z * z);
        if (!(detail::twisted_factor(k) == rhs))
            throw IdentityFailed("change of variables fails on the stage " + std::to_string(n) +
                                 " factor");
    }
    return {{z, x, y}, k_max};
}

// ---- structure-space cohomology: presentations and dimensions ----

// quotient presentation of the structure-space cohomology with l+1 strata
inline GradedRingPresentation bg_quotient(SurfaceFamily family, int l,
                                          CoeffTag field = CoeffTag::Q) {
    GradedRingPresentation P = universal_ring();
    P.name = std::string(family_name(family)) + " l=" + std::to_string(l) + " (" +
             coeff_name(field) + ")";
    P.field = field;
    P.relations = {relation_polynomial(l, family).polynomial};
    return P;
}

namespace detail {

inline void add_shifted(std::vector<long long>& acc, const std::vector<long long>& table,
                        int shift) {
    for (int d = shift; d < (int)acc.size(); ++d)
        if (d - shift < (int)table.size()) acc[d] += table[d - shift];
}

inline void require_dims_equal(const std::vector<long long>& a, const std::vector<long long>& b,
                               const std::string& what) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t d = 0; d < n; ++d)
        if (a[d] != b[d])
            throw IdentityFailed(what + ": dimensions disagree in degree " + std::to_string(d) +
                                 " (" + std::to_string(a[d]) + " vs " + std::to_string(b[d]) +
                                 ")");
    if (a.size() != b.size()) throw IdentityFailed(what + ": dimension ranges differ");
}

}  // namespace detail

/*
 * Degreewise dimensions assembled from the stage tables: the gluing sequence
 * splits over any coefficients, so the total is a direct sum of one suspended
 * stage table per stratum.
 */
inline std::vector<long long> bg_groups_dims(SurfaceFamily family, const Rational& lambda,
                                             CoeffTag field, int D) {
    if (field != CoeffTag::Q && field != CoeffTag::F2)
        throw BadInput("bg_groups_dims: stage tables cover Q and F2 only");
    int l = top_stratum_index(family, lambda);
    auto table = [&](int n) {
        IsometryGroup g = isometry_group(n);
        return hilbert_series(field == CoeffTag::Q ? g.rational : g.mod2, D).dims;
    };
    std::vector<long long> acc(D + 1, 0);
    if (family == SurfaceFamily::untwisted) {
        detail::add_shifted(acc, table(0), 0);
        for (int i = 1; i <= l; ++i) detail::add_shifted(acc, table(2 * i), 4 * i - 2);
    } else {
        for (int i = 0; i <= l; ++i) detail::add_shifted(acc, table(2 * i + 1), 4 * i);
    }
    return acc;
}

struct GluingSquare {
    int stage = 0;                // the stage being glued in
    RingMap restriction;          // previous quotient -> stage ring modulo the euler class
    RingMap projection;           // free stage ring -> the same quotient
    LaurentPoly euler_multiple;   // image of the previous relation divided by the euler class
};

/*
 * The square expressing the step from l-1 to l strata: both legs land in the
 * stage ring modulo the euler class of the link.  Building it certifies that
 * the previous relation restricts into the euler ideal (the quotient is
 * computed exactly; mod 2 the reduction is checked degreewise).
 */
inline GluingSquare gluing_square(SurfaceFamily family, int l, CoeffTag field = CoeffTag::Q) {
    if (l < 1) throw BadInput("gluing_square: needs a previous stratum");
    if (field != CoeffTag::Q && (field != CoeffTag::F2 || family != SurfaceFamily::twisted))
        throw BadInput("gluing_square: only the twisted family has a mod-2 model");
    int m = stage_label(family, l);
    EulerClass e = euler_class(m);
    RingMap psi = psi_star(m);
    GluingSquare sq;
    sq.stage = m;
    GradedRingPresentation stage_free = isometry_group(m).rational;
    stage_free.field = field;
    GradedRingPresentation corner = stage_free;
    corner.name = "stage " + std::to_string(m) + " link (" + coeff_name(field) + ")";
    corner.relations = {e.poly};
    GradedRingPresentation prev = bg_quotient(family, l - 1, field);
    LaurentPoly restricted = psi.apply(prev.relations[0]);
    // division in the variable where the euler class has a constant lead
    sq.euler_multiple = poly_divide_exact(restricted, e.poly, m % 2 == 0 ? 0 : 1);
    if (field == CoeffTag::F2 && !restricted.is_zero()) {
        DegreeSlice<FieldF2> slice(corner, restricted.weighted_degree(corner.degrees));
        for (int c : slice.reduce(restricted))
            if (c != 0)
                throw IdentityFailed("gluing square: restricted relation survives mod 2");
    }
    sq.restriction = {prev, corner, psi.images};
    sq.projection = {stage_free, corner,
                     {LaurentPoly::var(corner.vars, 0), LaurentPoly::var(corner.vars, 1)}};
    sq.restriction.validate();
    sq.projection.validate();
    return sq;
}

struct BgData {
    SurfaceFamily family = SurfaceFamily::untwisted;
    Rational lambda = 1;
    int l = 0;
    GradedRingPresentation ring;    // universal quotient by the stage-l relation
    HilbertData hilbert;            // regularity-checked closed form
    std::vector<long long> groups;  // direct-sum dims from the stage tables
    std::vector<long long> fiber;   // dims through the gluing square (the base dims at l=0)
};

// the rational presentation with its independent dimension computations; any
// disagreement between the three throws
inline BgData bg_rational_presentation(SurfaceFamily family, const Rational& lambda, int D = 20) {
    BgData out;
    out.family = family;
    out.lambda = lambda;
    out.l = top_stratum_index(family, lambda);
    out.ring = bg_quotient(family, out.l);
    out.hilbert = hilbert_series(out.ring, D);
    out.groups = bg_groups_dims(family, lambda, CoeffTag::Q, D);
    if (out.l >= 1) {
        GluingSquare sq = gluing_square(family, out.l);
        out.fiber = fiber_product_dims(sq.restriction, sq.projection, D);
    } else {
        out.fiber = out.hilbert.dims;
    }
    detail::require_dims_equal(out.hilbert.dims, out.groups, out.ring.name + " vs stage tables");
    detail::require_dims_equal(out.hilbert.dims, out.fiber, out.ring.name + " vs gluing square");
    return out;
}

/*
 * Mod-2 dimensions through the gluing: the twisted family supports an honest
 * fiber product; the untwisted one assembles the split sequence crossing by
 * crossing, each shift dictated by its link.
 */
inline std::vector<long long> bg_mod2_dims(SurfaceFamily family, const Rational& lambda, int D) {
    int l = top_stratum_index(family, lambda);
    if (family == SurfaceFamily::twisted) {
        if (l == 0) return hilbert_series(bg_quotient(family, 0, CoeffTag::F2), D).dims;
        GluingSquare sq = gluing_square(family, l, CoeffTag::F2);
        return fiber_product_dims(sq.restriction, sq.projection, D);
    }
    std::vector<long long> dims = hilbert_series(isometry_group(0).mod2, D).dims;
    for (int k = 1; k <= l; ++k) {
        int m = stage_label(family, k);
        detail::add_shifted(dims, hilbert_series(isometry_group(m).mod2, D).dims, 2 * m - 2);
    }
    return dims;
}

struct ConnectivityResult {
    bool agree = false;
    int stage = 0;            // the first stage missing at the lower level
    int checked_through = 0;  // last degree compared
};

/*
 * Raising the level from lambda to mu changes nothing below the dimension of
 * the first new link: dimensions agree through degree 2m - 4.
 */
inline ConnectivityResult connectivity_check(SurfaceFamily family, const Rational& lambda,
                                             const Rational& mu, CoeffTag field, int D) {
    if (mu < lambda) throw BadInput("connectivity_check: needs lambda <= mu");
    int l = top_stratum_index(family, lambda);
    int m = stage_label(family, l + 1);
    int bound = (int)std::min<long long>(D, 2LL * m - 4);
    auto dims_at = [&](const Rational& level) {
        if (field == CoeffTag::Q)
            return hilbert_series(bg_quotient(family, top_stratum_index(family, level)), bound)
                .dims;
        return bg_groups_dims(family, level, field, bound);
    };
    return {dims_at(lambda) == dims_at(mu), m, bound};
}

// ---- the half-integral module basis ----

// x, y (degree 4) and z (degree 2): variables of the half-integral model
inline const Vars& xyz_vars() {
    static const Vars v = Vars::of({"x", "y", "z"});
    return v;
}

namespace detail {

inline LaurentPoly xyz_tower_factor(int i) {  // z^2 + i^4 x - i^2 y
    const Vars& v = xyz_vars();
    long long ii = (long long)i * i;
    return LaurentPoly::var(v, 2, 2) + Rational(ii * ii) * LaurentPoly::var(v, 0) -
           Rational(ii) * LaurentPoly::var(v, 1);
}

inline Rational factorial(int k) {
    Rational f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace detail

/*
 * The module basis in the half-integral variables, indexed by z-degree:
 * 1, z, z^2/2!, z(z^2+x-y)/3!, z^2(z^2+x-y)/4!, ...  Even index 2k carries
 * z^2/(2k)! times the first k-1 tower factors, odd index 2k+1 carries
 * z/(2k+1)! times the first k.
 */
inline std::vector<LaurentPoly> module_basis_polys(int count) {
    const Vars& v = xyz_vars();
    std::vector<LaurentPoly> out;
    LaurentPoly z = LaurentPoly::var(v, 2);
    LaurentPoly z2 = LaurentPoly::var(v, 2, 2);
    LaurentPoly running = LaurentPoly::constant(v, 1);
    int have = 0;
    for (int idx = 0; idx < count; ++idx) {
        int need = idx == 0 ? 0 : (idx - 1) / 2;
        while (have < need) running = running * detail::xyz_tower_factor(++have);
        int k = idx / 2;
        if (idx == 0) {
            out.push_back(LaurentPoly::constant(v, 1));
        } else if (idx % 2 == 0) {
            Rational c = Rational(1) / detail::factorial(2 * k);
            out.push_back(c * (z2 * running));
        } else {
            Rational c = Rational(1) / detail::factorial(2 * k + 1);
            out.push_back(c * (z * running));
        }
    }
    return out;
}

struct ModuleBasisData {
    int l = 0;
    GradedRingPresentation ambient;  // quotient by the z-tower relation
    std::vector<LaurentPoly> basis;  // index == z-degree
    std::vector<std::string> names;  // a0, b0, a1, b1, ...
    std::vector<long long> dims;     // free-module count == quotient dims
    ModuleClosureReport closure;     // products expand with Z[1/2][x, y] coefficients
};

/*
 * Free-module certificate for l+1 strata in the half-integral variables: the
 * 2l+1 basis elements reproduce the quotient dimensions degreewise and close
 * under multiplication with coefficients integral away from 2.
 */
inline ModuleBasisData half_integral_module_basis(int l, int D = 24) {
    if (l < 0) throw BadInput("half_integral_module_basis: negative stage index");
    ModuleBasisData out;
    out.l = l;
    const Vars& v = xyz_vars();
    LaurentPoly rel = LaurentPoly::var(v, 2);
    for (int i = 1; i <= l; ++i) rel = rel * detail::xyz_tower_factor(i);
    out.ambient = {"half-integral l=" + std::to_string(l), v, {4, 4, 2}, {rel}, CoeffTag::Q};
    out.basis = module_basis_polys(2 * l + 1);
    for (int idx = 0; idx <= 2 * l; ++idx)
        out.names.push_back((idx % 2 ? std::string("b") : std::string("a")) +
                            std::to_string(idx / 2));
    out.dims = hilbert_series(out.ambient, D).dims;
    GradedRingPresentation xy{"degree-4 coefficients", Vars::of({"x", "y"}), {4, 4}, {},
                              CoeffTag::Q};
    std::vector<long long> table = hilbert_series(xy, D).dims;
    std::vector<long long> free_dims(D + 1, 0);
    for (const auto& b : out.basis)
        detail::add_shifted(free_dims, table, (int)b.weighted_degree(out.ambient.degrees));
    detail::require_dims_equal(free_dims, out.dims, out.ambient.name + " module count");
    out.closure =
        module_closure_check(v, rel, 2, out.basis, {{0, 1}, {}, CoeffConstraint::Z_half});
    return out;
}

// ---- the odd-primes model and its involutions ----

inline const Vars& uvw_vars() {
    static const Vars v = Vars::of({"u", "v", "w"});
    return v;
}

namespace detail {

inline LaurentPoly uvw_factor(int i) {  // (w + i^2 u)^2 - 4 i^2 v^2
    const Vars& V = uvw_vars();
    long long ii = (long long)i * i;
    LaurentPoly head = LaurentPoly::var(V, 2) + Rational(ii) * LaurentPoly::var(V, 0);
    return head * head - Rational(4 * ii) * LaurentPoly::var(V, 1, 2);
}

// rewrite even powers of the middle variable as the degree-4 generator
inline LaurentPoly collapse_square(const LaurentPoly& p, const Vars& target) {
    LaurentPoly out(target);
    for (const auto& [e, c] : p.terms) {
        if (e[1] % 2 != 0) throw BadInput("collapse_square: odd power of the squared variable");
        out.add_term({e[0], e[1] / 2, e[2]}, c);
    }
    return out;
}

inline Rational constant_value(const LaurentPoly& p) {
    if (p.is_zero()) return Rational(0);
    Exponents zero(p.vars.size(), 0);
    if (p.terms.size() != 1 || p.terms.begin()->first != zero)
        throw BadInput("expected a constant coefficient");
    return p.terms.begin()->second;
}

}  // namespace detail

/*
 * The action of the second involution on the degree-4 generator is forced:
 * writing it as -uw + p V + q u^2 and imposing that the square is the
 * identity pins (p, q) = (1, 0).  Solved symbolically from the vanishing of
 * tau(tau(V)) - V, not assumed.
 */
inline std::pair<Rational, Rational> solve_involution_ansatz() {
    Vars five = Vars::of({"u", "V", "w", "p", "q"});
    LaurentPoly u = LaurentPoly::var(five, 0);
    LaurentPoly V = LaurentPoly::var(five, 1);
    LaurentPoly w = LaurentPoly::var(five, 2);
    LaurentPoly p = LaurentPoly::var(five, 3);
    LaurentPoly q = LaurentPoly::var(five, 4);
    LaurentPoly tauV = -(u * w) + p * V + q * (u * u);
    LaurentPoly defect = substitute(tauV, five, {-u, tauV, w, p, q}) - V;
    // split into one equation in (p, q) per (u, V, w)-monomial
    std::map<Exponents, LaurentPoly> byMonomial;
    for (const auto& [e, c] : defect.terms) {
        Exponents key{e[0], e[1], e[2], 0, 0};
        auto [it, fresh] = byMonomial.try_emplace(key, LaurentPoly::zero(five));
        it->second.add_term({0, 0, 0, e[3], e[4]}, c);
    }
    std::vector<LaurentPoly> eqs;
    for (auto& [key, poly] : byMonomial) eqs.push_back(poly);
    auto solve_linear = [&](std::size_t var, std::size_t other) {
        for (const auto& e : eqs) {
            if (e.is_zero() || var_degree(e, var) != 1 || var_degree(e, other) != 0) continue;
            Rational c1 = detail::constant_value(coefficient_of_power(e, var, 1));
            Rational c0 = detail::constant_value(coefficient_of_power(e, var, 0));
            return Rational(-c0 / c1);
        }
        throw UnderdeterminedSystem("involution ansatz: no linear equation pins the coefficient");
    };
    Rational sp = solve_linear(3, 4);
    for (auto& e : eqs) e = substitute(e, five, {u, V, w, LaurentPoly::constant(five, sp), q});
    Rational sq = solve_linear(4, 3);
    for (auto& e : eqs) e = substitute(e, five, {u, V, w, p, LaurentPoly::constant(five, sq)});
    for (const auto& e : eqs)
        if (!e.is_zero())
            throw IdentityFailed("involution ansatz: solved coefficients leave a residue");
    return {sp, sq};
}

struct AwayFromTwoData {
    std::vector<LaurentPoly> f;          // w/(2k+1)! times the first k factors
    std::vector<LaurentPoly> g;          // w(w+k^2 u+2kv)/(2k)! times the first k-1
    std::vector<LaurentPoly> fg_basis;   // 1, f0, g1, f1, ...; index == w-degree
    std::vector<LaurentPoly> ab_basis;   // 1, f0, a1, f1, ...; the sign-invariant basis
    Rational ansatz_v = 0, ansatz_u2 = 0;  // forced involution coefficients (1, 0)
    ModuleClosureReport fg_closure;      // coefficients in Z[u, v]
    ModuleClosureReport ab_closure;      // coefficients in Z[1/2][u, v^2]
};

/*
 * End-to-end verification of the odd-primes model.  Builds the integral
 * basis f_k, g_k, recovers the basis fixed by the sign involution v -> -v,
 * checks the square-completion identity behind every factor, certifies the
 * second involution on (u, v^2, w) with its forced normalization, matches
 * the substitution x = u^2, y = 4v^2 - 2uw, z = w against the half-integral
 * module basis, and closes both bases under multiplication.  Each failed
 * check throws, naming the step.
 */
inline AwayFromTwoData away_from_two_verification() {
    const int k_top = 9;              // basis indices 0..19
    const std::size_t pair_bound = 10;  // products cover indices up to f4
    const Vars& V = uvw_vars();
    LaurentPoly u = LaurentPoly::var(V, 0);
    LaurentPoly v = LaurentPoly::var(V, 1);
    LaurentPoly w = LaurentPoly::var(V, 2);
    AwayFromTwoData out;

    std::vector<LaurentPoly> prods{LaurentPoly::constant(V, 1)};  // prods[j] = first j factors
    for (int i = 1; i <= k_top; ++i) prods.push_back(prods.back() * detail::uvw_factor(i));
    std::vector<LaurentPoly> a{LaurentPoly::constant(V, 1)};
    for (int k = 0; k <= k_top; ++k) {
        Rational cf = Rational(1) / detail::factorial(2 * k + 1);
        out.f.push_back(cf * (w * prods[k]));
        LaurentPoly head = w + Rational((long long)k * k) * u + Rational(2LL * k) * v;
        Rational cg = Rational(1) / detail::factorial(2 * k);
        out.g.push_back(cg * (w * head * prods[k == 0 ? 0 : k - 1]));
        if (k >= 1) a.push_back(out.g[k] - (Rational(k, 2) * u + v) * out.f[k - 1]);
    }
    out.fg_basis.push_back(LaurentPoly::constant(V, 1));
    out.ab_basis.push_back(LaurentPoly::constant(V, 1));
    for (int k = 0; k <= k_top; ++k) {
        if (k >= 1) {
            out.fg_basis.push_back(out.g[k]);
            out.ab_basis.push_back(a[k]);
        }
        out.fg_basis.push_back(out.f[k]);
        out.ab_basis.push_back(out.f[k]);
    }

    // the sign involution and the invariant basis
    std::vector<LaurentPoly> flip{u, -v, w};
    for (int k = 0; k <= k_top; ++k) {
        if (!(substitute(out.f[k], V, flip) == out.f[k]))
            throw IdentityFailed("sign involution moves f_" + std::to_string(k));
        if (k >= 1) {
            LaurentPoly expect = out.g[k] - Rational(2) * (v * out.f[k - 1]);
            if (!(substitute(out.g[k], V, flip) == expect))
                throw IdentityFailed("sign involution acts unexpectedly on g_" +
                                     std::to_string(k));
            if (!(substitute(a[k], V, flip) == a[k]))
                throw IdentityFailed("invariant candidate a_" + std::to_string(k) + " moves");
            Rational c = Rational(1) / detail::factorial(2 * k);
            if (!(a[k] == c * ((w * w) * prods[k - 1])))
                throw IdentityFailed("a_" + std::to_string(k) +
                                     " does not reduce to its closed form");
        }
    }

    // square completion behind every factor
    for (int i = 1; i <= 8; ++i) {
        long long ii = (long long)i * i;
        LaurentPoly rhs = w * w + Rational(ii * ii) * (u * u) -
                          Rational(2 * ii) * (Rational(2) * (v * v) - u * w);
        if (!(detail::uvw_factor(i) == rhs))
            throw IdentityFailed("square completion fails for factor " + std::to_string(i));
    }

    // the second involution on (u, v^2, w)
    GradedRingPresentation uVw{"squared-variable model", Vars::of({"u", "V", "w"}), {2, 4, 2},
                               {}, CoeffTag::Q};
    LaurentPoly su = LaurentPoly::var(uVw.vars, 0);
    LaurentPoly sV = LaurentPoly::var(uVw.vars, 1);
    LaurentPoly sw = LaurentPoly::var(uVw.vars, 2);
    RingMap tau{uVw, uVw, {-su, sV - su * sw, sw}};
    tau.validate();
    for (std::size_t i = 0; i < 3; ++i)
        if (!(tau.apply(tau.images[i]) == LaurentPoly::var(uVw.vars, i)))
            throw IdentityFailed("squared-variable involution does not square to the identity");
    for (std::size_t idx = 0; idx < out.ab_basis.size(); ++idx) {
        LaurentPoly folded = detail::collapse_square(out.ab_basis[idx], uVw.vars);
        if (!(tau.apply(folded) == folded))
            throw IdentityFailed("squared-variable involution moves basis element " +
                                 std::to_string(idx));
    }
    auto forced = solve_involution_ansatz();
    out.ansatz_v = forced.first;
    out.ansatz_u2 = forced.second;

    // substitution onto the half-integral basis
    std::vector<LaurentPoly> subs{u * u, Rational(4) * (v * v) - Rational(2) * (u * w), w};
    auto half = module_basis_polys((int)out.ab_basis.size());
    for (std::size_t idx = 0; idx < out.ab_basis.size(); ++idx)
        if (!(substitute(half[idx], V, subs) == out.ab_basis[idx]))
            throw IdentityFailed("half-integral basis element " + std::to_string(idx) +
                                 " does not match under the substitution");
    for (int i = 1; i <= 8; ++i)
        if (!(substitute(detail::xyz_tower_factor(i), V, subs) == detail::uvw_factor(i)))
            throw IdentityFailed("tower factor " + std::to_string(i) +
                                 " does not match under the substitution");

    // closure of both bases
    out.fg_closure = module_closure_check(V, std::nullopt, 2, out.fg_basis,
                                          {{0, 1}, {}, CoeffConstraint::Z}, pair_bound);
    out.ab_closure = module_closure_check(V, std::nullopt, 2, out.ab_basis,
                                          {{0, 1}, {1}, CoeffConstraint::Z_half}, pair_bound);
    return out;
}

// ---- the two-strata twisted space ----

struct TwistedTwoStrata {
    std::vector<std::pair<LaurentPoly, LaurentPoly>> generators;  // T, X, Y on stages 1 and 3
    std::pair<LaurentPoly, LaurentPoly> extra_integral;           // (T Y)/3 on both stages
    LaurentPoly relation;                                         // Y (9X - 2T^2)
    std::vector<long long> fiber;  // glued dims over the common circle
    std::vector<long long> dims;   // quotient dims; checked equal to fiber
};

/*
 * The two-strata twisted space glued from stages 1 and 3 over their common
 * circle: the universal generators restrict compatibly, the degree-8
 * relation vanishes on both stages, the extra class (T Y)/3 stays integral,
 * and the glued dimensions match the quotient presentation.
 */
inline TwistedTwoStrata twisted_two_strata(int D = 20) {
    IsometryGroup g1 = isometry_group(1), g3 = isometry_group(3);
    RingMap psi1 = psi_star(1), psi3 = psi_star(3);
    auto circles = shear_equivalent_circles(1, 3, Rational(2));
    RingMap pb1 = circle_pullback(g1, circles.first.dir[0], circles.first.dir[1]);
    RingMap pb3 = circle_pullback(g3, circles.second.dir[0], circles.second.dir[1]);
    TwistedTwoStrata out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!(pb1.apply(psi1.images[i]) == pb3.apply(psi3.images[i])))
            throw IdentityFailed("stage images of generator " + std::to_string(i) +
                                 " disagree on the common circle");
        out.generators.push_back({psi1.images[i], psi3.images[i]});
    }
    const Vars& uv = universal_ring().vars;
    out.relation = LaurentPoly::var(uv, 2) * kernel_generator(3);
    if (!psi1.apply(out.relation).is_zero() || !psi3.apply(out.relation).is_zero())
        throw IdentityFailed("degree-8 relation fails to vanish on a stage");
    LaurentPoly ty = LaurentPoly::var(uv, 0) * LaurentPoly::var(uv, 2);
    out.extra_integral = {Rational(1, 3) * psi1.apply(ty), Rational(1, 3) * psi3.apply(ty)};
    for (const auto* side : {&out.extra_integral.first, &out.extra_integral.second})
        for (const auto& [e, c] : side->terms)
            if (!is_integer(c))
                throw IdentityFailed("(T Y)/3 fails to stay integral on a stage");
    out.fiber = fiber_product_dims(pb1, pb3, D);
    GradedRingPresentation quot = universal_ring();
    quot.name = "two-strata twisted quotient";
    quot.relations = {out.relation};
    out.dims = hilbert_series(quot, D).dims;
    detail::require_dims_equal(out.fiber, out.dims, quot.name);
    return out;
}

}  // namespace ruled
