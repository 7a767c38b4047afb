#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <type_traits>
#include <vector>

#include "ruled/field.hpp"
#include "ruled/laurent.hpp"
#include "ruled/series.hpp"

/*
 * Finitely presented graded-commutative rings handled degree by degree:
 * in each degree the quotient is (monomials) / (span of relation multiples),
 * and every question in scope (dimensions, kernels, fiber products, fixed
 * subspaces of involutions) reduces to exact row reduction over Q, F2 or F3.
 * No Groebner machinery: the degree bound keeps everything linear.
 */

namespace ruled {

struct GradedRingPresentation {
    std::string name;
    Vars vars;
    std::vector<int> degrees;            // positive generator degrees
    std::vector<LaurentPoly> relations;  // homogeneous, nonnegative exponents
    CoeffTag field = CoeffTag::Q;

    void validate() const {
        if (vars.size() != degrees.size()) throw BadInput("presentation: degree list mismatch");
        for (int d : degrees)
            if (d <= 0) throw BadInput("presentation: generator degrees must be positive");
        for (const auto& r : relations) {
            if (!(r.vars == vars)) throw BadInput("presentation: relation in wrong variables");
            if (r.has_negative_exponent()) throw BadInput("presentation: relation not polynomial");
            if (r.is_zero()) throw BadInput("presentation: zero relation");
            if (!r.is_homogeneous(degrees, r.weighted_degree(degrees)))
                throw BadInput("presentation: relation not homogeneous");
        }
    }

    long long relation_degree(std::size_t i) const {
        return relations[i].weighted_degree(degrees);
    }
};

// all exponent vectors of the given total degree, descending lexicographic
inline std::vector<Exponents> monomials_of_degree(const std::vector<int>& degrees, long long d) {
    std::vector<Exponents> out;
    Exponents cur(degrees.size(), 0);
    std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long rest) {
        if (i == degrees.size()) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (long long k = rest / degrees[i]; k >= 0; --k) {
            cur[i] = (int)k;
            rec(i + 1, rest - k * degrees[i]);
        }
        cur[i] = 0;
    };
    rec(0, d);
    return out;
}

/*
 * Reduction data for one degree: the relation multiples are row reduced once;
 * afterwards any polynomial of that degree reduces to coordinates on the
 * non-pivot ("free") monomials, which form a basis of the quotient.
 */
template <class F>
class DegreeSlice {
  public:
    std::vector<Exponents> monomials;
    std::map<Exponents, int, LexDesc> column;
    Matrix<F> reduced;          // rref of the relation-multiple span
    std::vector<int> pivots;    // pivot columns, one per reduced row
    std::vector<int> free_cols; // quotient basis columns

    DegreeSlice(const GradedRingPresentation& P, long long d) {
        monomials = monomials_of_degree(P.degrees, d);
        for (std::size_t i = 0; i < monomials.size(); ++i) column[monomials[i]] = (int)i;

        std::vector<std::vector<typename F::Elem>> rows;
        for (std::size_t r = 0; r < P.relations.size(); ++r) {
            long long dr = P.relation_degree(r);
            if (dr > d) continue;
            for (const auto& mu : monomials_of_degree(P.degrees, d - dr)) {
                auto prod = P.relations[r].shifted(mu);
                rows.push_back(to_row(prod));
            }
        }
        reduced = Matrix<F>((int)rows.size(), (int)monomials.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < monomials.size(); ++j) reduced.at((int)i, (int)j) = rows[i][j];
        pivots = reduced.rref();
        std::size_t p = 0;
        for (int j = 0; j < (int)monomials.size(); ++j) {
            if (p < pivots.size() && pivots[p] == j)
                ++p;
            else
                free_cols.push_back(j);
        }
    }

    int dim() const { return (int)free_cols.size(); }

    std::vector<typename F::Elem> to_row(const LaurentPoly& p) const {
        std::vector<typename F::Elem> row(column.size(), F::zero());
        for (const auto& [e, c] : p.terms) {
            auto it = column.find(e);
            if (it == column.end()) throw BadInput("polynomial has a term outside this degree");
            row[it->second] = F::from_rational(c);
        }
        return row;
    }

    // quotient coordinates on the free columns
    std::vector<typename F::Elem> reduce(const LaurentPoly& p) const {
        auto row = to_row(p);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            auto c = row[pivots[r]];
            if (F::is_zero(c)) continue;
            for (int j = 0; j < (int)column.size(); ++j)
                row[j] = F::sub(row[j], F::mul(c, reduced.at((int)r, j)));
        }
        std::vector<typename F::Elem> out;
        out.reserve(free_cols.size());
        for (int j : free_cols) out.push_back(row[j]);
        return out;
    }
};

struct DegreeBasis {
    std::vector<Exponents> basis;
    int dim = 0;
};

template <class F>
DegreeBasis monomial_basis_impl(const GradedRingPresentation& P, long long d) {
    DegreeSlice<F> slice(P, d);
    DegreeBasis out;
    out.dim = slice.dim();
    for (int j : slice.free_cols) out.basis.push_back(slice.monomials[j]);
    return out;
}

// dispatch on the presentation's coefficient field
template <class Fn>
auto with_field(CoeffTag tag, Fn&& fn) {
    switch (tag) {
        case CoeffTag::Q: return fn(FieldQ{});
        case CoeffTag::F2: return fn(FieldF2{});
        case CoeffTag::F3: return fn(FieldF3{});
        default: throw BadInput("expected a field coefficient tag");
    }
}

inline DegreeBasis monomial_basis(const GradedRingPresentation& P, long long d) {
    P.validate();
    return with_field(P.field, [&](auto f) {
        using F = decltype(f);
        return monomial_basis_impl<F>(P, d);
    });
}

struct HilbertData {
    Poly1 numerator;    // prod (1 - t^{deg relation})
    Poly1 denominator;  // prod (1 - t^{deg generator})
    std::vector<long long> dims;  // verified against monomial_basis up to D
};

// closed-form Hilbert series, cross-checked degreewise; a mismatch means the
// relations fail to form a regular sequence and raises RegularityCheckFailed
inline HilbertData hilbert_series(const GradedRingPresentation& P, int D) {
    P.validate();
    HilbertData h;
    h.numerator = {Rational(1)};
    for (std::size_t r = 0; r < P.relations.size(); ++r)
        h.numerator = poly1_mul(h.numerator, one_minus_tpow((int)P.relation_degree(r)));
    h.denominator = {Rational(1)};
    for (int d : P.degrees) h.denominator = poly1_mul(h.denominator, one_minus_tpow(d));
    auto series = series_of_rational(h.numerator, h.denominator, D);
    for (int d = 0; d <= D; ++d) {
        long long dim = monomial_basis(P, d).dim;
        if (Rational(dim) != series.coeff[d])
            throw RegularityCheckFailed("closed form disagrees with monomial count in degree " +
                                        std::to_string(d) + ": " + std::to_string(dim) + " vs " +
                                        to_string(series.coeff[d]));
        h.dims.push_back(dim);
    }
    return h;
}

struct RingMap {
    GradedRingPresentation source;
    GradedRingPresentation target;
    std::vector<LaurentPoly> images;  // one per source generator, in target variables

    void validate() const {
        source.validate();
        target.validate();
        if (source.field != target.field) throw BadInput("ring map: mixed coefficient fields");
        if (images.size() != source.vars.size()) throw BadInput("ring map: image count mismatch");
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (!(images[i].vars == target.vars)) throw BadInput("ring map: image in wrong variables");
            if (images[i].has_negative_exponent()) throw BadInput("ring map: image not polynomial");
            if (!images[i].is_zero() &&
                !images[i].is_homogeneous(target.degrees, source.degrees[i]))
                throw BadInput("ring map: image of " + source.vars.names[i] +
                               " is not homogeneous of degree " +
                               std::to_string(source.degrees[i]));
        }
    }

    LaurentPoly apply(const LaurentPoly& p) const {
        if (!(p.vars == source.vars)) throw BadInput("ring map: polynomial in wrong variables");
        LaurentPoly out(target.vars);
        for (const auto& [e, c] : p.terms) {
            LaurentPoly term = LaurentPoly::constant(target.vars, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 0) throw BadInput("ring map: negative exponent");
                for (int k = 0; k < e[i]; ++k) term = term * images[i];
            }
            out += term;
        }
        return out;
    }
};

inline LaurentPoly monomial_to_poly(const Vars& vars, const Exponents& e) {
    return LaurentPoly::monomial(vars, e, 1);
}

template <class F>
std::vector<long long> kernel_dims_impl(const RingMap& f, int D) {
    std::vector<long long> out;
    for (int d = 0; d <= D; ++d) {
        DegreeSlice<F> src(f.source, d);
        DegreeSlice<F> tgt(f.target, d);
        Matrix<F> m(src.dim(), tgt.dim());
        for (int i = 0; i < src.dim(); ++i) {
            auto img = f.apply(monomial_to_poly(f.source.vars, src.monomials[src.free_cols[i]]));
            auto row = tgt.reduce(img);
            for (int j = 0; j < tgt.dim(); ++j) m.at(i, j) = row[j];
        }
        out.push_back(src.dim() - m.rank());
    }
    return out;
}

inline std::vector<long long> kernel_dims(const RingMap& f, int D) {
    f.validate();
    return with_field(f.source.field, [&](auto fld) {
        using F = decltype(fld);
        return kernel_dims_impl<F>(f, D);
    });
}

// degreewise dimensions of the ideal generated by the candidates inside the
// source presentation
template <class F>
std::vector<long long> ideal_dims_impl(const GradedRingPresentation& P,
                                       const std::vector<LaurentPoly>& gens, int D) {
    std::vector<long long> out;
    for (int d = 0; d <= D; ++d) {
        DegreeSlice<F> slice(P, d);
        std::vector<std::vector<typename F::Elem>> rows;
        for (const auto& g : gens) {
            long long dg = g.weighted_degree(P.degrees);
            if (dg > d || g.is_zero()) continue;
            for (const auto& mu : monomials_of_degree(P.degrees, d - dg))
                rows.push_back(slice.reduce(g.shifted(mu)));
        }
        Matrix<F> m((int)rows.size(), slice.dim());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < slice.dim(); ++j) m.at((int)i, j) = rows[i][j];
        out.push_back(m.rank());
    }
    return out;
}

inline std::vector<long long> ideal_dims(const GradedRingPresentation& P,
                                         const std::vector<LaurentPoly>& gens, int D) {
    P.validate();
    return with_field(P.field, [&](auto fld) {
        using F = decltype(fld);
        return ideal_dims_impl<F>(P, gens, D);
    });
}

// checks that the kernel of f is exactly the ideal generated by the
// candidates, degree by degree up to D
inline bool kernel_matches_ideal(const RingMap& f, const std::vector<LaurentPoly>& candidates,
                                 int D) {
    for (const auto& g : candidates) {
        auto img = f.apply(g);
        if (img.is_zero()) continue;
        long long d = g.weighted_degree(f.source.degrees);
        auto zero = with_field(f.target.field, [&](auto fld) {
            using F = decltype(fld);
            DegreeSlice<F> tgt(f.target, d);
            for (auto& c : tgt.reduce(img))
                if (!F::is_zero(c)) return false;
            return true;
        });
        if (!zero) return false;
    }
    return kernel_dims(f, D) == ideal_dims(f.source, candidates, D);
}

template <class F>
std::vector<long long> fiber_product_dims_impl(const RingMap& f, const RingMap& g, int D) {
    std::vector<long long> out;
    for (int d = 0; d <= D; ++d) {
        DegreeSlice<F> a(f.source, d);
        DegreeSlice<F> b(g.source, d);
        DegreeSlice<F> c(f.target, d);
        Matrix<F> gm(b.dim(), c.dim());
        for (int i = 0; i < b.dim(); ++i) {
            auto row = c.reduce(g.apply(monomial_to_poly(g.source.vars, b.monomials[b.free_cols[i]])));
            for (int j = 0; j < c.dim(); ++j) gm.at(i, j) = row[j];
        }
        if (gm.rank() != c.dim())
            throw SurjectivityFailed("second map is not surjective in degree " + std::to_string(d));
        Matrix<F> stacked(a.dim() + b.dim(), c.dim());
        for (int i = 0; i < a.dim(); ++i) {
            auto row = c.reduce(f.apply(monomial_to_poly(f.source.vars, a.monomials[a.free_cols[i]])));
            for (int j = 0; j < c.dim(); ++j) stacked.at(i, j) = row[j];
        }
        for (int i = 0; i < b.dim(); ++i)
            for (int j = 0; j < c.dim(); ++j) stacked.at(a.dim() + i, j) = F::neg(gm.at(i, j));
        out.push_back(a.dim() + b.dim() - stacked.rank());
    }
    return out;
}

// dimensions of {(a, b) : f(a) = g(b)} per degree; g must be degreewise
// surjective so that these are the dimensions of the glued ring
inline std::vector<long long> fiber_product_dims(const RingMap& f, const RingMap& g, int D) {
    f.validate();
    g.validate();
    if (!(f.target.vars == g.target.vars)) throw BadInput("fiber product: different targets");
    if (f.source.field != g.source.field) throw BadInput("fiber product: mixed coefficient fields");
    return with_field(f.source.field, [&](auto fld) {
        using F = decltype(fld);
        return fiber_product_dims_impl<F>(f, g, D);
    });
}

struct InvariantSubring {
    std::vector<long long> dims;                  // +1 eigenspace per degree
    std::vector<std::vector<LaurentPoly>> basis;  // representatives per degree
};

// fixed subspace of a ring involution, degree by degree; sigma is given by
// generator images inside the same presentation
inline InvariantSubring invariant_subring(const GradedRingPresentation& P,
                                          const std::vector<LaurentPoly>& sigma, int D) {
    RingMap s{P, P, sigma};
    s.validate();
    for (std::size_t i = 0; i < P.vars.size(); ++i) {
        auto twice = s.apply(sigma[i]);
        LaurentPoly gen = LaurentPoly::var(P.vars, i, 1);
        if (!(twice == gen)) {
            // compare inside the quotient in the generator's degree
            bool ok = with_field(P.field, [&](auto fld) {
                using F = decltype(fld);
                DegreeSlice<F> slice(P, P.degrees[i]);
                auto r1 = slice.reduce(twice);
                auto r2 = slice.reduce(gen);
                return r1 == r2;
            });
            if (!ok)
                throw NotInvolution("square of the involution moves generator " + P.vars.names[i]);
        }
    }
    if (P.field == CoeffTag::F2)
        throw BadInput("invariant_subring: eigenspace split needs characteristic != 2");

    InvariantSubring out;
    with_field(P.field, [&](auto fld) -> int {
        using F = decltype(fld);
        for (int d = 0; d <= D; ++d) {
            DegreeSlice<F> slice(P, d);
            int n = slice.dim();
            // rows of (sigma - id) acting on the quotient basis
            Matrix<F> m(n, n);
            for (int i = 0; i < n; ++i) {
                auto img = s.apply(monomial_to_poly(P.vars, slice.monomials[slice.free_cols[i]]));
                auto row = slice.reduce(img);
                for (int j = 0; j < n; ++j) m.at(i, j) = row[j];
                m.at(i, i) = F::sub(m.at(i, i), F::one());
            }
            // left kernel: rows v with v (sigma - id) = 0; transpose and reduce
            Matrix<F> t(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) t.at(i, j) = m.at(j, i);
            auto pivots = t.rref();
            // nullspace basis of t: free columns parameterize solutions
            std::vector<int> free_cols;
            {
                std::size_t p = 0;
                for (int j = 0; j < n; ++j) {
                    if (p < pivots.size() && pivots[p] == (int)j)
                        ++p;
                    else
                        free_cols.push_back(j);
                }
            }
            out.dims.push_back((long long)free_cols.size());
            std::vector<LaurentPoly> reps;
            for (int fc : free_cols) {
                LaurentPoly rep(P.vars);
                // solution with 1 at the free column, back-filled pivots
                std::vector<typename F::Elem> sol(n, F::zero());
                sol[fc] = F::one();
                for (std::size_t r = 0; r < pivots.size(); ++r)
                    sol[pivots[r]] = F::neg(t.at((int)r, fc));
                for (int j = 0; j < n; ++j) {
                    if (F::is_zero(sol[j])) continue;
                    Rational c;
                    if constexpr (std::is_same_v<F, FieldQ>)
                        c = sol[j];
                    else
                        c = Rational(sol[j]);
                    rep.add_term(slice.monomials[slice.free_cols[j]], c);
                }
                reps.push_back(rep);
            }
            out.basis.push_back(std::move(reps));
        }
        return 0;
    });
    return out;
}

// ---- free-module expansion machinery ----

inline long long var_degree(const LaurentPoly& p, std::size_t var) {
    long long d = 0;
    for (const auto& [e, c] : p.terms) d = std::max(d, (long long)e[var]);
    return d;
}

// coefficient of var^k, returned with that variable's exponent zeroed
inline LaurentPoly coefficient_of_power(const LaurentPoly& p, std::size_t var, long long k) {
    LaurentPoly out(p.vars);
    for (const auto& [e, c] : p.terms) {
        if (e[var] != k) continue;
        Exponents f = e;
        f[var] = 0;
        out.add_term(f, c);
    }
    return out;
}

// substitute a polynomial for every variable of p; images live in target_vars
inline LaurentPoly substitute(const LaurentPoly& p, const Vars& target_vars,
                              const std::vector<LaurentPoly>& images) {
    if (images.size() != p.vars.size()) throw BadInput("substitute: image count mismatch");
    for (const auto& im : images)
        if (!(im.vars == target_vars)) throw BadInput("substitute: image in wrong variables");
    LaurentPoly out(target_vars);
    for (const auto& [e, c] : p.terms) {
        LaurentPoly term = LaurentPoly::constant(target_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0) throw BadInput("substitute: negative exponent");
            for (int k = 0; k < e[i]; ++k) term = term * images[i];
        }
        out += term;
    }
    return out;
}

/*
 * Exact division in the designated variable: the divisor must have a nonzero
 * constant leading coefficient there.  Throws NotDivisible when a nonzero
 * remainder survives.
 */
inline LaurentPoly poly_divide_exact(LaurentPoly p, const LaurentPoly& divisor, std::size_t var) {
    long long dr = var_degree(divisor, var);
    LaurentPoly lead = coefficient_of_power(divisor, var, dr);
    Exponents czero(p.vars.size(), 0);
    auto it = lead.terms.find(czero);
    if (lead.terms.size() != 1 || it == lead.terms.end())
        throw BadInput("poly_divide_exact: divisor leading coefficient is not constant");
    Rational lc = it->second;
    LaurentPoly quotient(p.vars);
    while (!p.is_zero()) {
        long long dp = var_degree(p, var);
        if (dp < dr) throw NotDivisible("poly_divide_exact: nonzero remainder");
        LaurentPoly c = coefficient_of_power(p, var, dp);
        Exponents shift(p.vars.size(), 0);
        shift[var] = (int)(dp - dr);
        LaurentPoly q = (Rational(1) / lc) * c.shifted(shift);
        quotient += q;
        p -= q * divisor;
    }
    return quotient;
}

// remainder of p modulo a relation monic in the designated variable
inline LaurentPoly reduce_mod_monic(LaurentPoly p, const LaurentPoly& rel, std::size_t var) {
    long long dr = var_degree(rel, var);
    LaurentPoly lead = coefficient_of_power(rel, var, dr);
    if (!(lead == LaurentPoly::constant(rel.vars, 1)))
        throw BadInput("reduce_mod_monic: relation is not monic in the designated variable");
    for (long long dp = var_degree(p, var); dp >= dr; dp = var_degree(p, var)) {
        LaurentPoly c = coefficient_of_power(p, var, dp);
        if (c.is_zero()) break;
        Exponents shift(p.vars.size(), 0);
        shift[var] = (int)(dp - dr);
        p -= c.shifted(shift) * rel;
    }
    return p;
}

enum class CoeffConstraint { Z, Z_half };

struct CoefficientRing {
    std::vector<std::size_t> var_indices;  // ambient variables allowed in coefficients
    std::vector<std::size_t> even_vars;    // subset required to appear with even exponent
    CoeffConstraint constraint = CoeffConstraint::Z;
};

inline void check_coefficient(const LaurentPoly& c, const Vars& ambient,
                              const CoefficientRing& ring, const std::string& context) {
    for (const auto& [e, q] : c.terms) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            bool allowed = std::find(ring.var_indices.begin(), ring.var_indices.end(), i) !=
                           ring.var_indices.end();
            if (e[i] != 0 && !allowed)
                throw CoefficientViolation(context + ": coefficient involves " + ambient.names[i]);
            if (e[i] % 2 != 0 && std::find(ring.even_vars.begin(), ring.even_vars.end(), i) !=
                                     ring.even_vars.end())
                throw CoefficientViolation(context + ": odd power of " + ambient.names[i]);
        }
        bool ok = ring.constraint == CoeffConstraint::Z ? is_integer(q) : is_dyadic(q);
        if (!ok)
            throw CoefficientViolation(context + ": coefficient " + to_string(q) +
                                       (ring.constraint == CoeffConstraint::Z
                                            ? " is not an integer"
                                            : " is not integral away from 2"));
    }
}

struct ModuleExpansion {
    std::vector<LaurentPoly> coefficients;  // one per basis element
};

/*
 * Expand p over the module basis: basis element i must have degree i in the
 * designated variable with a nonzero constant leading coefficient, so top
 * degree peeling determines the expansion uniquely.
 */
inline ModuleExpansion expand_over_basis(LaurentPoly p, const std::vector<LaurentPoly>& basis,
                                         std::size_t var) {
    std::vector<Rational> lead(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (var_degree(basis[i], var) != (long long)i)
            throw NotFree("basis element " + std::to_string(i) +
                          " does not have the expected degree in the module variable");
        LaurentPoly l = coefficient_of_power(basis[i], var, (long long)i);
        Exponents zero(p.vars.size(), 0);
        if (l.terms.size() != 1 || l.terms.begin()->first != zero)
            throw NotFree("basis element " + std::to_string(i) +
                          " has a non-constant leading coefficient");
        lead[i] = l.terms.begin()->second;
    }
    ModuleExpansion out;
    out.coefficients.assign(basis.size(), LaurentPoly::zero(p.vars));
    while (!p.is_zero()) {
        long long d = var_degree(p, var);
        LaurentPoly top = coefficient_of_power(p, var, d);
        if (top.is_zero()) throw NotFree("internal: vanishing top coefficient");
        if (d >= (long long)basis.size())
            throw NotFree("degree " + std::to_string(d) + " exceeds the basis range");
        LaurentPoly c = Rational(1 / lead[d]) * top;
        out.coefficients[d] += c;
        p -= c * basis[d];
    }
    return out;
}

struct ModuleClosureEntry {
    std::size_t i = 0, j = 0;
    ModuleExpansion expansion;
};

struct ModuleClosureReport {
    std::vector<ModuleClosureEntry> entries;
};

/*
 * Certifies that the span of the basis over the coefficient ring is closed
 * under multiplication: every pairwise product, reduced modulo the monic
 * relation when one is present, expands with coefficients inside the
 * constrained ring.  Violations raise NotFree / CoefficientViolation.
 */
inline ModuleClosureReport module_closure_check(const Vars& ambient,
                                                const std::optional<LaurentPoly>& relation,
                                                std::size_t var,
                                                const std::vector<LaurentPoly>& basis,
                                                const CoefficientRing& ring,
                                                std::size_t pairs_up_to = SIZE_MAX) {
    ModuleClosureReport report;
    std::size_t bound = std::min(basis.size(), pairs_up_to);
    for (std::size_t i = 0; i < bound; ++i) {
        for (std::size_t j = i; j < bound; ++j) {
            LaurentPoly prod = basis[i] * basis[j];
            if (relation) prod = reduce_mod_monic(prod, *relation, var);
            auto exp = expand_over_basis(prod, basis, var);
            std::string context = "product " + std::to_string(i) + " * " + std::to_string(j);
            for (const auto& c : exp.coefficients) check_coefficient(c, ambient, ring, context);
            report.entries.push_back({i, j, std::move(exp)});
        }
    }
    return report;
}

}  // namespace ruled
