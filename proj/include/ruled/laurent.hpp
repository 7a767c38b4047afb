#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ruled/rational.hpp"

/*
 * Laurent polynomials with exact rational coefficients in a fixed ordered
 * variable list.  A monomial is its integer exponent vector; terms are kept
 * in a map under descending lexicographic order on exponents, so iteration
 * order is the canonical term order used for rendering and golden output.
 */

namespace ruled {

using Exponents = std::vector<int>;

struct Vars {
    std::vector<std::string> names;

    std::size_t size() const { return names.size(); }
    bool operator==(const Vars& o) const = default;

    static Vars of(std::initializer_list<const char*> ns) {
        Vars v;
        for (auto* n : ns) v.names.emplace_back(n);
        return v;
    }
};

// descending lexicographic on exponent vectors
struct LexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

inline Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Exponents exp_neg(const Exponents& a) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline bool exp_is_zero(const Exponents& a) {
    return std::all_of(a.begin(), a.end(), [](int e) { return e == 0; });
}

// sign of the first nonzero entry; 0 for the trivial monomial
inline int exp_lex_sign(const Exponents& a) {
    for (int e : a) {
        if (e > 0) return 1;
        if (e < 0) return -1;
    }
    return 0;
}

class LaurentPoly {
public:
    Vars vars;
    std::map<Exponents, Rational, LexDesc> terms;  // nonzero coefficients only

    LaurentPoly() = default;
    explicit LaurentPoly(Vars v) : vars(std::move(v)) {}

    static LaurentPoly zero(const Vars& v) { return LaurentPoly(v); }

    static LaurentPoly constant(const Vars& v, const Rational& c) {
        LaurentPoly p(v);
        p.add_term(Exponents(v.size(), 0), c);
        return p;
    }

    static LaurentPoly monomial(const Vars& v, const Exponents& e, const Rational& c = 1) {
        LaurentPoly p(v);
        p.add_term(e, c);
        return p;
    }

    // single variable to a power
    static LaurentPoly var(const Vars& v, std::size_t i, int power = 1, const Rational& c = 1) {
        Exponents e(v.size(), 0);
        e[i] = power;
        return monomial(v, e, c);
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Rational coeff(const Exponents& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? Rational(0) : it->second;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a.vars);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) r.add_term(exp_add(ea, eb), ca * cb);
        return r;
    }

    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a) {
        LaurentPoly r(a.vars);
        if (c == 0) return r;
        for (const auto& [e, k] : a.terms) r.terms.emplace(e, c * k);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a) { return Rational(-1) * a; }

    bool operator==(const LaurentPoly& o) const { return vars == o.vars && terms == o.terms; }

    // multiply by a single monomial (optionally signed)
    LaurentPoly shifted(const Exponents& e, const Rational& c = 1) const {
        LaurentPoly r(vars);
        for (const auto& [m, k] : terms) r.add_term(exp_add(m, e), c * k);
        return r;
    }

    // sum of coefficients = evaluation at every variable set to 1
    Rational eval_at_one() const {
        Rational s = 0;
        for (const auto& [e, c] : terms) s += c;
        return s;
    }

    LaurentPoly positive_part() const {
        LaurentPoly r(vars);
        for (const auto& [e, c] : terms)
            if (c > 0) r.terms.emplace(e, c);
        return r;
    }

    LaurentPoly negative_part() const {  // returned with positive coefficients
        LaurentPoly r(vars);
        for (const auto& [e, c] : terms)
            if (c < 0) r.terms.emplace(e, -c);
        return r;
    }

    bool has_negative_exponent() const {
        for (const auto& [e, c] : terms)
            for (int x : e)
                if (x < 0) return true;
        return false;
    }

    // total degree under the given variable weights; 0 for the zero polynomial
    long long weighted_degree(const std::vector<int>& weights) const {
        long long d = 0;
        bool first = true;
        for (const auto& [e, c] : terms) {
            long long t = 0;
            for (std::size_t i = 0; i < e.size(); ++i) t += (long long)e[i] * weights[i];
            if (first || t > d) d = t;
            first = false;
        }
        return d;
    }

    bool is_homogeneous(const std::vector<int>& weights, long long deg) const {
        for (const auto& [e, c] : terms) {
            long long t = 0;
            for (std::size_t i = 0; i < e.size(); ++i) t += (long long)e[i] * weights[i];
            if (t != deg) return false;
        }
        return true;
    }
};

// exponent-lattice map e -> M e; M given as rows, one per target variable
inline LaurentPoly monomial_substitution(const LaurentPoly& p,
                                         const std::vector<std::vector<int>>& M,
                                         const Vars& target_vars) {
    if (!M.empty() && M.size() != target_vars.size())
        throw BadInput("substitution matrix row count != target variable count");
    LaurentPoly r(target_vars);
    for (const auto& [e, c] : p.terms) {
        Exponents ne(target_vars.size(), 0);
        for (std::size_t i = 0; i < M.size(); ++i) {
            if (M[i].size() != e.size()) throw BadInput("substitution matrix width mismatch");
            long long s = 0;
            for (std::size_t j = 0; j < e.size(); ++j) s += (long long)M[i][j] * e[j];
            ne[i] = (int)s;
        }
        r.add_term(ne, c);
    }
    return r;
}

/*
 * Exact division by (1 - m) for a nontrivial monomial m.  The exponent
 * lattice splits into cosets of Z*m; on each coset the problem is univariate
 * division by (1 - t), solved by prefix sums.  Throws NotDivisible when any
 * coset has a nonzero coefficient total.
 */
inline LaurentPoly divide_exact(const LaurentPoly& p, const Exponents& m) {
    if (exp_is_zero(m)) throw BadInput("divide_exact: trivial monomial");
    std::size_t pivot = 0;
    while (m[pivot] == 0) ++pivot;

    // coset key: e - k*m with k = floor(e[pivot] / m[pivot])
    std::map<Exponents, std::map<long long, Rational>, LexDesc> cosets;
    for (const auto& [e, c] : p.terms) {
        long long k = floor_div(e[pivot], m[pivot]);
        Exponents key(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) key[i] = e[i] - (int)(k * m[i]);
        cosets[key][k] = c;
    }

    LaurentPoly q(p.vars);
    for (const auto& [key, line] : cosets) {
        Rational run = 0;
        long long kmax = line.rbegin()->first;
        for (auto it = line.begin(); it != line.end(); ++it) {
            long long k = it->first;
            run += it->second;
            if (k == kmax) break;
            // q coefficient at key + k*m is the running prefix sum, and stays
            // constant until the next stored exponent, so fill the gap too
            long long next = std::next(it)->first;
            for (long long j = k; j < next && run != 0; ++j) {
                Exponents e(key.size());
                for (std::size_t i = 0; i < key.size(); ++i) e[i] = key[i] + (int)(j * m[i]);
                q.add_term(e, run);
            }
        }
        if (run != 0)
            throw NotDivisible("divide_exact: remainder on coset with nonzero coefficient sum");
    }
    return q;
}

inline std::string render_exponent_part(const Vars& vars, const Exponents& e, bool denominator) {
    std::string s;
    int factors = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        int x = denominator ? -e[i] : e[i];
        if (x <= 0) continue;
        if (factors) s += "*";
        s += vars.names[i];
        if (x != 1) s += "^" + std::to_string(x);
        ++factors;
    }
    if (denominator && factors > 1) s = "(" + s + ")";
    return s;
}

// canonical rendering: descending lexicographic terms, "p/q" rationals,
// explicit ^ powers, * between factors, negative exponents as divisions
inline std::string render(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string num = render_exponent_part(p.vars, e, false);
        std::string den = render_exponent_part(p.vars, e, true);
        std::string body;
        if (num.empty() && den.empty()) {
            body = to_string(a);
        } else {
            if (a != 1) body = to_string(a) + "*";
            body += num.empty() ? "1" : num;
            if (!den.empty()) body += "/" + den;
        }
        out += body;
    }
    return out;
}

}  // namespace ruled
