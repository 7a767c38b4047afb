#pragma once

#include <vector>

#include "ruled/laurent.hpp"

/*
 * Rational functions kept in the structured form
 *
 *     numerator / prod_i (1 - m_i)
 *
 * where each m_i is a nontrivial monomial.  Normalization rewrites every
 * factor so that m_i is lexicographically positive, via
 * 1 - m^{-1} = -m^{-1} (1 - m); the extracted unit monomials are absorbed
 * into the numerator.  Equality is decided by cross-multiplication.
 */

namespace ruled {

struct StructuredRationalFunction {
    LaurentPoly numerator;
    std::vector<Exponents> factors;  // sorted, each lex-positive
};

inline LaurentPoly one_minus_monomial(const Vars& vars, const Exponents& m) {
    LaurentPoly p = LaurentPoly::constant(vars, 1);
    p.add_term(m, -1);
    return p;
}

inline StructuredRationalFunction make_rf(LaurentPoly numerator, std::vector<Exponents> raw_factors) {
    for (auto& m : raw_factors) {
        int s = exp_lex_sign(m);
        if (s == 0) throw BadInput("rational function: factor 1 - 1 vanishes");
        if (s < 0) {
            m = exp_neg(m);
            numerator = numerator.shifted(m, -1);  // 1/(1-m^{-1}) = -m/(1-m)
        }
    }
    std::sort(raw_factors.begin(), raw_factors.end(), LexDesc{});
    return {std::move(numerator), std::move(raw_factors)};
}

inline LaurentPoly denominator_poly(const Vars& vars, const std::vector<Exponents>& factors) {
    LaurentPoly d = LaurentPoly::constant(vars, 1);
    for (const auto& m : factors) d = d * one_minus_monomial(vars, m);
    return d;
}

// multiset difference b \ a (for multiplicities of denominator factors)
inline std::vector<Exponents> factor_complement(const std::vector<Exponents>& a,
                                                const std::vector<Exponents>& b) {
    std::vector<Exponents> out;
    std::size_t i = 0;
    for (const auto& m : b) {
        if (i < a.size() && a[i] == m) {
            ++i;
            continue;
        }
        out.push_back(m);
    }
    return out;
}

inline StructuredRationalFunction rf_add(const StructuredRationalFunction& f,
                                         const StructuredRationalFunction& g) {
    // common denominator: multiset union with maximal multiplicities
    std::vector<Exponents> common;
    std::size_t i = 0, j = 0;
    LexDesc lt;
    while (i < f.factors.size() || j < g.factors.size()) {
        if (j == g.factors.size() || (i < f.factors.size() && lt(f.factors[i], g.factors[j]))) {
            common.push_back(f.factors[i++]);
        } else if (i == f.factors.size() || lt(g.factors[j], f.factors[i])) {
            common.push_back(g.factors[j++]);
        } else {
            common.push_back(f.factors[i]);
            ++i, ++j;
        }
    }
    const Vars& vars = f.numerator.vars;
    LaurentPoly num = f.numerator * denominator_poly(vars, factor_complement(f.factors, common)) +
                      g.numerator * denominator_poly(vars, factor_complement(g.factors, common));
    return {std::move(num), std::move(common)};
}

inline StructuredRationalFunction rf_mul(const StructuredRationalFunction& f,
                                         const StructuredRationalFunction& g) {
    std::vector<Exponents> factors = f.factors;
    factors.insert(factors.end(), g.factors.begin(), g.factors.end());
    std::sort(factors.begin(), factors.end(), LexDesc{});
    return {f.numerator * g.numerator, std::move(factors)};
}

inline bool rf_equal(const StructuredRationalFunction& f, const StructuredRationalFunction& g) {
    const Vars& vars = f.numerator.vars;
    return f.numerator * denominator_poly(vars, g.factors) ==
           g.numerator * denominator_poly(vars, f.factors);
}

// exact cancellation of every denominator factor; NotDivisible if the value
// is not a Laurent polynomial
inline LaurentPoly rf_to_laurent(const StructuredRationalFunction& f) {
    LaurentPoly p = f.numerator;
    for (const auto& m : f.factors) p = divide_exact(p, m);
    return p;
}

}  // namespace ruled
