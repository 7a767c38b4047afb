#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "ruled/errors.hpp"

namespace ruled {

using Int = boost::multiprecision::cpp_int;
// cpp_rational keeps gcd(num, den) = 1 and den > 0, which is exactly the
// canonical form all exact computations here rely on.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// true when q = a / 2^k for some integer a, k >= 0
inline bool is_dyadic(const Rational& q) {
    Int d = denominator(q);
    while (d % 2 == 0) d /= 2;
    return d == 1;
}

inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// accepts "p" or "p/q" with optional leading minus on p
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    Int num, den = 1;
    try {
        num = Int(slash == std::string::npos ? s : s.substr(0, slash));
        if (slash != std::string::npos) den = Int(s.substr(slash + 1));
    } catch (const std::exception&) {
        throw BadInput("malformed rational: " + s);
    }
    if (den == 0) throw BadInput("zero denominator: " + s);
    return Rational(num, den);
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace ruled
