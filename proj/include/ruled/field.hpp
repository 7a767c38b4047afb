#pragma once

#include <vector>

#include "ruled/rational.hpp"

/*
 * Coefficient fields for the degreewise linear algebra: exact rationals and
 * the prime fields F2, F3.  All dimension counts over quotient presentations
 * go through row reduction of small dense matrices with these scalars.
 */

namespace ruled {

enum class CoeffTag { Q, F2, F3, Z };

inline const char* coeff_name(CoeffTag t) {
    switch (t) {
        case CoeffTag::Q: return "Q";
        case CoeffTag::F2: return "F2";
        case CoeffTag::F3: return "F3";
        default: return "Z";
    }
}

struct FieldQ {
    using Elem = Rational;
    static Elem zero() { return Rational(0); }
    static Elem one() { return Rational(1); }
    static Elem from_rational(const Rational& q) { return q; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem inv(const Elem& a) { return 1 / a; }
    static bool is_zero(const Elem& a) { return a == 0; }
};

template <int P>
struct FieldP {
    using Elem = int;
    static Elem zero() { return 0; }
    static Elem one() { return 1; }
    static Elem from_rational(const Rational& q) {
        Int den = denominator(q) % P;
        if (den == 0) throw BadInput("coefficient has denominator divisible by the characteristic");
        int n = (int)(Int(numerator(q) % P) + P) % P;
        int d = (int)(Int(den) + P) % P;
        return mul(n, inv(d));
    }
    static Elem add(Elem a, Elem b) { return (a + b) % P; }
    static Elem sub(Elem a, Elem b) { return (a - b + P) % P; }
    static Elem mul(Elem a, Elem b) { return (a * b) % P; }
    static Elem neg(Elem a) { return (P - a) % P; }
    static Elem inv(Elem a) {
        if (a == 0) throw BadInput("inverse of zero");
        for (int x = 1; x < P; ++x)
            if (a * x % P == 1) return x;
        return 0;  // unreachable for prime P
    }
    static bool is_zero(Elem a) { return a == 0; }
};

using FieldF2 = FieldP<2>;
using FieldF3 = FieldP<3>;

template <class F>
class Matrix {
  public:
    int rows = 0, cols = 0;
    std::vector<typename F::Elem> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a((std::size_t)r * c, F::zero()) {}

    typename F::Elem& at(int i, int j) { return a[(std::size_t)i * cols + j]; }
    const typename F::Elem& at(int i, int j) const { return a[(std::size_t)i * cols + j]; }

    // in-place reduced row echelon form; returns the pivot column per pivot row
    std::vector<int> rref() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols && row < rows; ++col) {
            int sel = -1;
            for (int i = row; i < rows; ++i)
                if (!F::is_zero(at(i, col))) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            if (sel != row)
                for (int j = 0; j < cols; ++j) std::swap(at(sel, j), at(row, j));
            auto piv = F::inv(at(row, col));
            for (int j = col; j < cols; ++j) at(row, j) = F::mul(at(row, j), piv);
            for (int i = 0; i < rows; ++i) {
                if (i == row || F::is_zero(at(i, col))) continue;
                auto factor = at(i, col);
                for (int j = col; j < cols; ++j)
                    at(i, j) = F::sub(at(i, j), F::mul(factor, at(row, j)));
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        Matrix copy = *this;
        return (int)copy.rref().size();
    }
};

}  // namespace ruled
