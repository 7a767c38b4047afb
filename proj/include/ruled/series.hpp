#pragma once

#include <vector>

#include "ruled/rational.hpp"

/*
 * Dense univariate polynomials (index = degree) and truncated power series
 * used for Hilbert/Poincare series work.  Equality of two series presented
 * as num/den is decided exactly by cross-multiplying the polynomials.
 */

namespace ruled {

using Poly1 = std::vector<Rational>;  // coefficient of t^i at index i

inline void poly1_trim(Poly1& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly1 poly1_mul(const Poly1& a, const Poly1& b) {
    if (a.empty() || b.empty()) return {};
    Poly1 r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly1_trim(r);
    return r;
}

inline bool poly1_equal(Poly1 a, Poly1 b) {
    poly1_trim(a);
    poly1_trim(b);
    return a == b;
}

// 1 - t^k
inline Poly1 one_minus_tpow(int k) {
    Poly1 p(k + 1, Rational(0));
    p[0] = 1;
    p[k] = -1;
    return p;
}

struct TruncatedSeries {
    int max_degree = 0;
    std::vector<Rational> coeff;  // size max_degree + 1

    bool operator==(const TruncatedSeries&) const = default;
};

// expand num/den to order D; requires den(0) != 0
inline TruncatedSeries series_of_rational(const Poly1& num, const Poly1& den, int D) {
    if (den.empty() || den[0] == 0) throw BadInput("series_of_rational: denominator constant term is zero");
    TruncatedSeries s;
    s.max_degree = D;
    s.coeff.assign(D + 1, Rational(0));
    for (int k = 0; k <= D; ++k) {
        Rational c = k < (int)num.size() ? num[k] : Rational(0);
        for (int j = 1; j <= k && j < (int)den.size(); ++j) c -= den[j] * s.coeff[k - j];
        s.coeff[k] = c / den[0];
    }
    return s;
}

inline bool series_equal_by_cross_mult(const Poly1& num1, const Poly1& den1, const Poly1& num2,
                                       const Poly1& den2) {
    return poly1_equal(poly1_mul(num1, den2), poly1_mul(num2, den1));
}

}  // namespace ruled
