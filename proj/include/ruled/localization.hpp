#pragma once

#include <sstream>

#include "ruled/field.hpp"
#include "ruled/karshon.hpp"
#include "ruled/rational_function.hpp"

/*
 * Equivariant index of the Dolbeault complex with values in the holomorphic
 * tangent sheaf on F_n, localized to the four torus fixed points.  Each
 * vertex with isotropy weights w1, w2 contributes
 *
 *     w1 w2 (w1 + w2) / ((1 - w1)(1 - w2))
 *
 * and the sum is a genuine character.  Its negative part is the isotropy
 * character of the normal directions; after a change of weight basis it is
 * recognized as a one-parameter family of twisted symmetric powers, whose
 * equivariant Euler class generates the ideal that glues the classifying
 * spaces of neighbouring symplectomorphism groups.
 */

namespace ruled {

inline const Vars& index_vars() {
    static const Vars v = Vars::of({"x", "y"});
    return v;
}

inline const Vars& weight_vars() {
    static const Vars v = Vars::of({"a", "b"});
    return v;
}

inline const Vars& euler_vars() {
    static const Vars v = Vars::of({"A", "X"});
    return v;
}

inline LaurentPoly atiyah_bott_index(int n) {
    if (n < 0) throw BadInput("atiyah_bott_index: negative n");
    // the weights do not depend on the symplectic level, any admissible one works
    auto vws = fixed_point_weights(moment_polygon({n, Rational(n + 1)}));
    const Vars& vars = index_vars();
    StructuredRationalFunction total{LaurentPoly::zero(vars), {}};
    for (const auto& vw : vws) {
        Exponents w1{(int)vw.weights[0][0], (int)vw.weights[0][1]};
        Exponents w2{(int)vw.weights[1][0], (int)vw.weights[1][1]};
        LaurentPoly num(vars);  // w1 w2 (w1 + w2)
        num.add_term(exp_add(exp_add(w1, w1), w2), 1);
        num.add_term(exp_add(w1, exp_add(w2, w2)), 1);
        total = rf_add(total, make_rf(std::move(num), {w1, w2}));
    }
    return rf_to_laurent(total);
}

struct IndexSplit {
    LaurentPoly positive;  // automorphism directions
    LaurentPoly negative;  // obstruction directions, stored with positive signs
    long long dim_positive = 0;
    long long dim_negative = 0;
};

inline IndexSplit split_index(const LaurentPoly& index) {
    IndexSplit s;
    s.positive = index.positive_part();
    s.negative = index.negative_part();
    Rational dp = s.positive.eval_at_one(), dn = s.negative.eval_at_one();
    s.dim_positive = (long long)numerator(dp);
    s.dim_negative = (long long)numerator(dn);
    return s;
}

// exponent map sending (x, y) weights to the standard weights (a, b) of the
// maximal torus of the isometry group
inline std::vector<std::vector<int>> standard_weight_map(int n) {
    if (n % 2 == 0) return {{1, 0}, {-n / 2, 1}};
    return {{-(n - 1) / 2, 1}, {(n + 1) / 2, -1}};
}

// character of the obstruction directions in the standard weight basis
inline LaurentPoly h01_character_standard(int n) {
    if (n < 2) throw BadInput("h01_character_standard: requires n >= 2");
    auto neg = split_index(atiyah_bott_index(n)).negative;
    return monomial_substitution(neg, standard_weight_map(n), weight_vars());
}

struct IsotropyRep {
    int n = 0;
    Rational det_power;  // power of the determinant (odd) / circle (even) character
    int sym_power = 0;
    std::string group;

    std::string name() const {
        std::ostringstream os;
        os << "Det^(" << to_string(det_power) << ") * Sym^(" << sym_power << ")";
        return os.str();
    }

    // the character reconstructed from representation theory alone
    LaurentPoly expand_character() const {
        const Vars& vars = weight_vars();
        LaurentPoly c(vars);
        if (n % 2 == 1) {
            // weights of Sym^{n-2} of the defining representation, twisted by Det^d
            long long d = (long long)numerator(det_power);
            for (int i = 0; i <= sym_power; ++i)
                c.add_term({(int)(i + d), (int)(sym_power - i + d)}, 1);
        } else {
            // circle character times the odd symmetric power of the rotation group
            for (int j = -sym_power / 2; j <= sym_power / 2; ++j) c.add_term({1, j}, 1);
        }
        return c;
    }
};

inline IsotropyRep isotropy_rep_name(int n) {
    if (n < 2) throw BadInput("isotropy_rep_name: requires n >= 2");
    IsotropyRep r;
    r.n = n;
    r.sym_power = n - 2;
    if (n % 2 == 1) {
        r.det_power = Rational(-(n - 3), 2);
        r.group = "U(2)";
    } else {
        r.det_power = 1;
        r.group = "S^1 x SO(3)";
    }
    return r;
}

namespace detail {

// rewrite a symmetric polynomial in T1, T2 in terms of A = T1 + T2, X = T1 T2
inline LaurentPoly symmetrize_two_vars(LaurentPoly p, const Vars& out_vars) {
    const Vars& tv = p.vars;
    LaurentPoly result(out_vars);
    while (!p.is_zero()) {
        auto [e, c] = *p.terms.begin();  // leading term, descending lex so e[0] >= e[1]
        if (e[0] < e[1]) throw BadInput("symmetrize_two_vars: polynomial is not symmetric");
        result.add_term({e[0] - e[1], e[1]}, c);
        LaurentPoly a = LaurentPoly::var(tv, 0) + LaurentPoly::var(tv, 1);
        LaurentPoly basis = LaurentPoly::constant(tv, c);
        for (int i = 0; i < e[0] - e[1]; ++i) basis = basis * a;
        basis = basis.shifted({e[1], e[1]});  // times (T1 T2)^{e[1]}
        p -= basis;
    }
    return result;
}

}  // namespace detail

struct EulerClass {
    int n = 0;
    LaurentPoly poly;  // in A (degree 2) and X (degree 4)
    enum class Ring { Z, Z_half } ring = Ring::Z;

    const char* ring_name() const { return ring == Ring::Z ? "Z" : "Z[1/2]"; }
};

// product of the weight lines of the obstruction character, rewritten in the
// Weyl-invariant generators: A = T1 + T2, X = T1 T2 for odd n (swap action),
// A = T1, X = T2^2 for even n (negation action)
inline EulerClass euler_class(int n) {
    if (n < 2) throw BadInput("euler_class: requires n >= 2");
    LaurentPoly character = h01_character_standard(n);
    Vars tv = Vars::of({"T1", "T2"});
    LaurentPoly prod = LaurentPoly::constant(tv, 1);
    for (const auto& [e, c] : character.terms) {
        if (c != 1) throw BadInput("euler_class: character is not multiplicity free");
        LaurentPoly line(tv);
        line.add_term({1, 0}, e[0]);
        line.add_term({0, 1}, e[1]);
        prod = prod * line;
    }
    EulerClass out;
    out.n = n;
    if (n % 2 == 1) {
        out.ring = EulerClass::Ring::Z;
        out.poly = detail::symmetrize_two_vars(prod, euler_vars());
    } else {
        out.ring = EulerClass::Ring::Z_half;
        LaurentPoly q(euler_vars());
        for (const auto& [e, c] : prod.terms) {
            if (e[1] % 2 != 0) throw BadInput("euler_class: odd rotation weight survived");
            q.add_term({e[0], e[1] / 2}, c);
        }
        out.poly = q;
    }
    return out;
}

struct NzdCertificate {
    bool ok = false;
    std::string certificate;
};

// non-zero-divisor certificate for the Euler class in the cohomology of the
// classifying space of the isometry group, over the named coefficients
inline NzdCertificate verify_euler_nzd(int n, CoeffTag tag) {
    EulerClass e = euler_class(n);
    NzdCertificate cert;
    if (n % 2 == 0) {
        // the subring generated by A is a polynomial retract over any
        // coefficients; a unit leading coefficient in A certifies the claim
        Exponents top{n - 1, 0};
        Rational c = e.poly.coeff(top);
        cert.ok = c == 1;
        cert.certificate = "coefficient of A^" + std::to_string(n - 1) + " is " + to_string(c);
        return cert;
    }
    // odd n: the ambient ring is a polynomial ring, so nonzero suffices
    int p = tag == CoeffTag::F2 ? 2 : tag == CoeffTag::F3 ? 3 : 0;
    for (const auto& [exp, c] : e.poly.terms) {
        if (!is_integer(c)) throw BadInput("verify_euler_nzd: non-integral coefficient");
        if (p == 0 || numerator(c) % p != 0) {
            cert.ok = true;
            cert.certificate = "nonzero over " + std::string(coeff_name(tag)) +
                               " (coefficient " + to_string(c) + ")";
            return cert;
        }
    }
    cert.certificate = "reduces to zero over " + std::string(coeff_name(tag));
    return cert;
}

}  // namespace ruled
