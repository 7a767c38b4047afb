#pragma once

#include <chrono>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ruled/catalog.hpp"

/*
 * End-to-end verification.  Each suite re-encodes its expected values
 * independently of the library code paths it exercises (closed display
 * forms, direct monomial counts, random property checks with fixed seeds)
 * and demands exact equality.  The driver runs any subset of suites and
 * produces a deterministic report, timing aside.
 */

namespace ruled {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    int number = 0;
    std::string slug;
    std::string title;
    std::vector<CheckResult> checks;
    bool passed = true;
    double seconds = 0;

    int failed_count() const {
        int n = 0;
        for (const auto& c : checks)
            if (!c.passed) ++n;
        return n;
    }
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    bool all_passed = true;
};

namespace verify_detail {

inline void check(SuiteResult& s, const std::string& name, bool ok,
                  const std::string& detail = "") {
    s.checks.push_back({name, ok, ok ? std::string() : detail});
    if (!ok) s.passed = false;
}

// ---- display-form oracles, assembled term by term ----

inline LaurentPoly display_index(int n) {
    const Vars& v = index_vars();
    LaurentPoly p = LaurentPoly::constant(v, 2);
    p.add_term({0, 1}, 1);
    p.add_term({0, -1}, 1);
    if (n == 0) {
        p.add_term({1, 0}, 1);
        p.add_term({-1, 0}, 1);
        return p;
    }
    for (int j = 0; j <= n; ++j) p.add_term({-1, j - n}, 1);
    for (int j = 0; j <= n - 2; ++j) p.add_term({1, j + 1}, -1);
    return p;
}

inline LaurentPoly display_standard_character(int n) {
    const Vars& v = weight_vars();
    LaurentPoly p(v);
    if (n % 2 == 1) {
        int d = -(n - 3) / 2;
        for (int j = 0; j <= n - 2; ++j) p.add_term({j + d, n - 2 - j + d}, 1);
    } else {
        for (int j = 1 - n / 2; j <= n / 2 - 1; ++j) p.add_term({1, j}, 1);
    }
    return p;
}

inline LaurentPoly display_euler(int n) {
    const Vars& v = euler_vars();
    LaurentPoly e = LaurentPoly::constant(v, 1);
    if (n % 2 == 1) {
        for (int i = 1; i <= (n - 1) / 2; ++i) {
            LaurentPoly f(v);
            f.add_term({0, 1}, (2 * i - 1) * (2 * i - 1));
            f.add_term({2, 0}, -i * (i - 1));
            e = e * f;
        }
    } else {
        e = LaurentPoly::var(v, 0);
        for (int i = 1; i <= n / 2 - 1; ++i) {
            LaurentPoly f(v);
            f.add_term({2, 0}, 1);
            f.add_term({0, 1}, -i * i);
            e = e * f;
        }
    }
    return e;
}

// ---- random generators with fixed seeds ----

inline LaurentPoly random_laurent(std::mt19937_64& rng, const Vars& vars, int lo, int hi,
                                  int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> e(lo, hi);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    LaurentPoly p(vars);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exponents ex(vars.size());
        for (auto& x : ex) x = e(rng);
        p.add_term(ex, Rational(num(rng), den(rng)));
    }
    return p;
}

inline Exponents random_monomial_exp(std::mt19937_64& rng, std::size_t nvars, int lo, int hi) {
    std::uniform_int_distribution<int> e(lo, hi);
    Exponents m(nvars, 0);
    do {
        for (auto& x : m) x = e(rng);
    } while (exp_is_zero(m));
    return m;
}

inline Poly1 random_poly1(std::mt19937_64& rng, int max_deg, bool unit_constant) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    Poly1 p(deg(rng) + 1);
    for (auto& c : p) c = Rational(num(rng), den(rng));
    if (unit_constant && p[0] == 0) p[0] = 1;
    return p;
}

}  // namespace verify_detail

// 1: the localized index equals its displayed closed forms
inline SuiteResult suite_index_characters(int) {
    SuiteResult s{1, "index", "index characters"};
    for (int n = 0; n <= 12; ++n)
        verify_detail::check(s, "index closed form n=" + std::to_string(n),
                             atiyah_bott_index(n) == verify_detail::display_index(n));
    return s;
}

// 2: the split of the index has the stated dimensions on both sides
inline SuiteResult suite_split_dimensions(int) {
    SuiteResult s{2, "dimensions", "index split dimensions"};
    IndexSplit s0 = split_index(atiyah_bott_index(0));
    verify_detail::check(s, "n=0 split is (6, 0)",
                         s0.dim_positive == 6 && s0.dim_negative == 0);
    for (int n = 1; n <= 12; ++n) {
        IndexSplit sp = split_index(atiyah_bott_index(n));
        verify_detail::check(s, "positive dimension n=" + std::to_string(n),
                             sp.dim_positive == n + 5);
        verify_detail::check(s, "negative dimension n=" + std::to_string(n),
                             sp.dim_negative == n - 1);
        verify_detail::check(s, "split reassembles the index n=" + std::to_string(n),
                             sp.positive - sp.negative == atiyah_bott_index(n));
    }
    return s;
}

// 3: obstruction characters in the standard weight basis
inline SuiteResult suite_standard_characters(int) {
    SuiteResult s{3, "characters", "standard-basis characters"};
    for (int n = 2; n <= 12; ++n) {
        LaurentPoly c = h01_character_standard(n);
        verify_detail::check(s, "displayed character n=" + std::to_string(n),
                             c == verify_detail::display_standard_character(n));
        verify_detail::check(s, "named representation n=" + std::to_string(n),
                             c == isotropy_rep_name(n).expand_character());
    }
    return s;
}

// 4: euler classes of the gluing links
inline SuiteResult suite_euler_classes(int) {
    SuiteResult s{4, "euler", "euler classes"};
    for (int n = 2; n <= 12; ++n) {
        EulerClass e = euler_class(n);
        std::string tag = " n=" + std::to_string(n);
        verify_detail::check(s, "closed form" + tag,
                             e.poly == verify_detail::display_euler(n));
        verify_detail::check(s, "degree 2(n-1)" + tag,
                             e.poly.is_homogeneous({2, 4}, 2 * (n - 1)));
        for (CoeffTag tag2 : {CoeffTag::Q, CoeffTag::F2, CoeffTag::F3}) {
            auto cert = verify_euler_nzd(n, tag2);
            verify_detail::check(
                s, std::string("non-zero divisor over ") + coeff_name(tag2) + tag, cert.ok,
                cert.certificate);
        }
        int k = n / 2;  // stratum index of stage n in its family
        SurfaceFamily family = n % 2 == 0 ? SurfaceFamily::untwisted : SurfaceFamily::twisted;
        Stratification st = strata(family, Rational(k) + Rational(1, 2));
        verify_detail::check(s, "degree equals the stratum codimension" + tag,
                             st.strata[k].codim == 2LL * (n - 1));
    }
    return s;
}

// 5: stage restriction maps and their kernels
inline SuiteResult suite_psi(int) {
    SuiteResult s{5, "psi", "stage restriction maps"};
    for (int n = 2; n <= 12; ++n) {
        RingMap d = derive_psi_star(n);
        RingMap p = psi_star(n);
        bool same = d.images.size() == p.images.size();
        for (std::size_t i = 0; same && i < p.images.size(); ++i)
            same = d.images[i] == p.images[i];
        verify_detail::check(s, "derived map equals the catalog n=" + std::to_string(n), same);
    }
    for (int n = 0; n <= 8; ++n)
        verify_detail::check(s, "kernel is principal n=" + std::to_string(n),
                             kernel_matches_ideal(psi_star(n), {kernel_generator(n)}, 24));
    return s;
}

// 6: structure-space presentations with three independent dimension routes
inline SuiteResult suite_presentations(int D) {
    SuiteResult s{6, "presentations", "structure-space presentations"};
    Poly1 den = poly1_mul(one_minus_tpow(2), poly1_mul(one_minus_tpow(4), one_minus_tpow(4)));
    for (SurfaceFamily family : {SurfaceFamily::untwisted, SurfaceFamily::twisted}) {
        for (int l = 0; l <= 5; ++l) {
            Rational lam = Rational(l) + Rational(1, 2);
            std::string tag = std::string(" ") + family_name(family) + " l=" + std::to_string(l);
            try {
                BgData bg = bg_rational_presentation(family, lam, D);
                verify_detail::check(s, "closed form, stage tables, gluing square agree" + tag,
                                     true);
                long long deg_r =
                    bg.ring.relations[0].weighted_degree(bg.ring.degrees);
                verify_detail::check(s, "series numerator" + tag,
                                     poly1_equal(bg.hilbert.numerator,
                                                 one_minus_tpow((int)deg_r)));
                verify_detail::check(s, "series denominator" + tag,
                                     poly1_equal(bg.hilbert.denominator, den));
            } catch (const std::exception& e) {
                verify_detail::check(s, "rational presentation" + tag, false, e.what());
            }
            try {
                verify_detail::check(s, "mod-2 routes agree" + tag,
                                     bg_mod2_dims(family, lam, D) ==
                                         bg_groups_dims(family, lam, CoeffTag::F2, D));
            } catch (const std::exception& e) {
                verify_detail::check(s, "mod-2 routes agree" + tag, false, e.what());
            }
        }
    }
    return s;
}

// 7: the twisted-family identities
inline SuiteResult suite_twisted(int) {
    SuiteResult s{7, "twisted", "twisted-family identities"};
    try {
        ChangeOfVariables cv = twisted_change_of_variables(8);
        verify_detail::check(s, "change of variables straightens factors k<=8",
                             cv.verified_through == 8);
    } catch (const std::exception& e) {
        verify_detail::check(s, "change of variables straightens factors k<=8", false, e.what());
    }
    try {
        TwistedTwoStrata d = twisted_two_strata(20);
        RingMap p1 = psi_star(1), p3 = psi_star(3);
        bool gens = d.generators.size() == 3;
        for (std::size_t i = 0; gens && i < 3; ++i)
            gens = d.generators[i].first == p1.images[i] &&
                   d.generators[i].second == p3.images[i];
        verify_detail::check(s, "generators restrict compatibly", gens);
        const Vars& kv = p3.target.vars;
        verify_detail::check(s, "(T Y)/3 is integral with components (0, A X)",
                             d.extra_integral.first.is_zero() &&
                                 d.extra_integral.second ==
                                     LaurentPoly::var(kv, 0) * LaurentPoly::var(kv, 1));
        verify_detail::check(s, "glued dimensions match the quotient", d.fiber == d.dims);
    } catch (const std::exception& e) {
        verify_detail::check(s, "two-strata twisted space", false, e.what());
    }
    return s;
}

// 8: module bases and their closures
inline SuiteResult suite_modules(int) {
    SuiteResult s{8, "modules", "module bases"};
    for (int l = 0; l <= 4; ++l) {
        std::string tag = " l=" + std::to_string(l);
        try {
            ModuleBasisData data = half_integral_module_basis(l, 24);
            verify_detail::check(s, "half-integral basis spans and closes" + tag,
                                 (int)data.basis.size() == 2 * l + 1 &&
                                     data.closure.entries.size() ==
                                         (data.basis.size() * (data.basis.size() + 1)) / 2);
        } catch (const std::exception& e) {
            verify_detail::check(s, "half-integral basis spans and closes" + tag, false,
                                 e.what());
        }
    }
    try {
        AwayFromTwoData d = away_from_two_verification();
        verify_detail::check(s, "odd-primes model: all stages",
                             d.fg_basis.size() == 20 && d.ab_basis.size() == 20);
        verify_detail::check(s, "involution ansatz forced to (1, 0)",
                             d.ansatz_v == Rational(1) && d.ansatz_u2 == Rational(0));
        verify_detail::check(s, "integral closures for both bases",
                             d.fg_closure.entries.size() == 55 &&
                                 d.ab_closure.entries.size() == 55);
    } catch (const std::exception& e) {
        verify_detail::check(s, "odd-primes model: all stages", false, e.what());
    }
    return s;
}

// 9: shear-equivalent circles have equal fixed-point data
inline SuiteResult suite_circles(int) {
    SuiteResult s{9, "circles", "equivalent circles"};
    for (int k = 0; k <= 8; ++k) {
        for (int l = k; l <= 8; l += 2) {
            int top = std::max(k, l);
            Rational base = top % 2 == 0 ? Rational(top, 2) : Rational(top - 1, 2);
            for (Rational lambda : {Rational(base + 1), Rational(base + Rational(3, 4))}) {
                auto [ck, cl] = shear_equivalent_circles(k, l, lambda);
                bool equal = karshon_graph_standard(k, lambda, ck.dir) ==
                             karshon_graph_standard(l, lambda, cl.dir);
                verify_detail::check(s,
                                     "graphs agree k=" + std::to_string(k) +
                                         " l=" + std::to_string(l) + " level " +
                                         to_string(lambda),
                                     equal);
            }
        }
    }
    return s;
}

// 10: connectivity bounds on randomized level pairs
inline SuiteResult suite_connectivity(int D) {
    SuiteResult s{10, "connectivity", "connectivity bounds"};
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<int> stage(0, 4);
    std::uniform_int_distribution<int> quarter(1, 4);
    std::uniform_int_distribution<int> gap(0, 8);
    for (SurfaceFamily family : {SurfaceFamily::untwisted, SurfaceFamily::twisted}) {
        for (int i = 0; i < 10; ++i) {
            Rational lambda = Rational(stage(rng)) + Rational(quarter(rng), 4);
            Rational mu = lambda + Rational(gap(rng), 4);
            CoeffTag field = i % 2 == 0 ? CoeffTag::Q : CoeffTag::F2;
            ConnectivityResult c = connectivity_check(family, lambda, mu, field, D);
            verify_detail::check(s,
                                 std::string(family_name(family)) + " " + to_string(lambda) +
                                     " -> " + to_string(mu) + " over " + coeff_name(field),
                                 c.agree,
                                 "dimensions differ at or below degree " +
                                     std::to_string(c.checked_through));
        }
    }
    return s;
}

// 11: property suites tying the layers together
inline SuiteResult suite_properties(int D) {
    SuiteResult s{11, "properties", "property suites"};
    Vars v3 = Vars::of({"x", "y", "z"});

    // exact division by 1 - monomial
    {
        std::mt19937_64 rng(424242);
        bool ok = true;
        for (int t = 0; ok && t < 1000; ++t) {
            LaurentPoly q = verify_detail::random_laurent(rng, v3, -3, 3, 5);
            Exponents m = verify_detail::random_monomial_exp(rng, 3, -2, 2);
            ok = divide_exact(q * one_minus_monomial(v3, m), m) == q;
        }
        verify_detail::check(s, "divide_exact inverts multiplication (1000 cases)", ok);
    }

    // structured rational-function identities
    {
        std::mt19937_64 rng(31337);
        bool ok = true;
        for (int t = 0; ok && t < 60; ++t) {
            auto rf = [&] {
                std::vector<Exponents> fac;
                std::uniform_int_distribution<int> nf(1, 2);
                int n = nf(rng);
                for (int i = 0; i < n; ++i)
                    fac.push_back(verify_detail::random_monomial_exp(rng, 3, -1, 2));
                return make_rf(verify_detail::random_laurent(rng, v3, -2, 2, 4), fac);
            };
            StructuredRationalFunction f = rf(), g = rf(), h = rf();
            ok = rf_equal(rf_add(f, g), rf_add(g, f)) &&
                 rf_equal(rf_mul(f, g), rf_mul(g, f)) &&
                 rf_equal(rf_add(rf_add(f, g), h), rf_add(f, rf_add(g, h))) &&
                 rf_equal(rf_mul(f, rf_add(g, h)), rf_add(rf_mul(f, g), rf_mul(f, h)));
        }
        verify_detail::check(s, "rational-function field identities (60 cases)", ok);
    }

    // rank-nullity against the closed-form quotient dimensions
    {
        bool ok = true;
        std::string where;
        for (int n = 0; ok && n <= 8; ++n) {
            auto ker = kernel_dims(psi_star(n), 16);
            GradedRingPresentation quot = universal_ring();
            quot.name = "universal mod stage-" + std::to_string(n) + " kernel";
            quot.relations = {kernel_generator(n)};
            auto image = hilbert_series(quot, 16).dims;
            for (int d = 0; ok && d <= 16; ++d) {
                long long total =
                    (long long)monomials_of_degree(universal_ring().degrees, d).size();
                ok = ker[d] + image[d] == total;
                if (!ok) where = "stage " + std::to_string(n) + " degree " + std::to_string(d);
            }
        }
        verify_detail::check(s, "rank-nullity along every stage restriction", ok, where);
    }

    // Mayer-Vietoris dimension identities on the gluing squares
    {
        bool ok = true;
        std::string where;
        for (SurfaceFamily family : {SurfaceFamily::untwisted, SurfaceFamily::twisted}) {
            for (int l = 1; ok && l <= 4; ++l) {
                GluingSquare sq = gluing_square(family, l);
                auto fib = fiber_product_dims(sq.restriction, sq.projection, 20);
                auto a = hilbert_series(sq.restriction.source, 20).dims;
                auto b = hilbert_series(sq.projection.source, 20).dims;
                auto c = hilbert_series(sq.restriction.target, 20).dims;
                for (int d = 0; ok && d <= 20; ++d) {
                    ok = fib[d] == a[d] + b[d] - c[d];
                    if (!ok)
                        where = std::string(family_name(family)) + " l=" + std::to_string(l) +
                                " degree " + std::to_string(d);
                }
            }
        }
        if (ok) {
            RingMap pb1 = circle_pullback(isometry_group(1), 2, 1);
            RingMap pb3 = circle_pullback(isometry_group(3), 1, 0);
            auto fib = fiber_product_dims(pb1, pb3, 20);
            auto a = hilbert_series(pb1.source, 20).dims;
            auto b = hilbert_series(pb3.source, 20).dims;
            auto c = hilbert_series(pb1.target, 20).dims;
            for (int d = 0; ok && d <= 20; ++d) {
                ok = fib[d] == a[d] + b[d] - c[d];
                if (!ok) where = "two-strata circle square degree " + std::to_string(d);
            }
        }
        verify_detail::check(s, "Mayer-Vietoris dimensions on every gluing square", ok, where);
    }

    // series cross-multiplication agrees with coefficientwise comparison
    {
        std::mt19937_64 rng(271828);
        std::uniform_int_distribution<int> coin(0, 1);
        bool ok = true;
        int bound = std::max(D, 30);
        for (int t = 0; ok && t < 100; ++t) {
            Poly1 n1 = verify_detail::random_poly1(rng, 6, false);
            Poly1 d1 = verify_detail::random_poly1(rng, 6, true);
            Poly1 n2, d2;
            if (coin(rng)) {
                Poly1 c = verify_detail::random_poly1(rng, 3, true);
                n2 = poly1_mul(n1, c);
                d2 = poly1_mul(d1, c);
            } else {
                n2 = verify_detail::random_poly1(rng, 6, false);
                d2 = verify_detail::random_poly1(rng, 6, true);
            }
            bool by_cross = series_equal_by_cross_mult(n1, d1, n2, d2);
            bool by_coeff = series_of_rational(n1, d1, bound).coeff ==
                            series_of_rational(n2, d2, bound).coeff;
            ok = by_cross == by_coeff;
        }
        verify_detail::check(s, "series cross-multiplication equality (100 cases)", ok);
    }
    return s;
}

// ---- driver ----

struct SuiteSpec {
    int number = 0;
    const char* slug = "";
    SuiteResult (*fn)(int) = nullptr;
};

inline const std::vector<SuiteSpec>& suite_registry() {
    static const std::vector<SuiteSpec> suites{
        {1, "index", suite_index_characters},
        {2, "dimensions", suite_split_dimensions},
        {3, "characters", suite_standard_characters},
        {4, "euler", suite_euler_classes},
        {5, "psi", suite_psi},
        {6, "presentations", suite_presentations},
        {7, "twisted", suite_twisted},
        {8, "modules", suite_modules},
        {9, "circles", suite_circles},
        {10, "connectivity", suite_connectivity},
        {11, "properties", suite_properties},
    };
    return suites;
}

inline VerifyReport run_verification(const std::string& suite = "all", int D = 30) {
    VerifyReport report;
    bool matched = false;
    for (const auto& spec : suite_registry()) {
        if (suite != "all" && suite != spec.slug) continue;
        matched = true;
        auto start = std::chrono::steady_clock::now();
        SuiteResult r;
        try {
            r = spec.fn(D);
        } catch (const std::exception& e) {
            r.number = spec.number;
            r.slug = spec.slug;
            verify_detail::check(r, "suite aborted", false, e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
        report.all_passed = report.all_passed && r.passed;
        report.suites.push_back(std::move(r));
    }
    if (!matched) throw BadInput("run_verification: unknown suite '" + suite + "'");
    return report;
}

inline std::string render_report(const VerifyReport& report, bool with_timing = true) {
    std::ostringstream os;
    for (const auto& s : report.suites) {
        os << (s.passed ? "PASS" : "FAIL") << "  " << s.number << " " << s.title << " ("
           << s.checks.size() << " checks";
        if (!s.passed) os << ", " << s.failed_count() << " failed";
        if (with_timing) {
            os << ", ";
            os.setf(std::ios::fixed);
            os.precision(2);
            os << s.seconds << "s";
        }
        os << ")\n";
        for (const auto& c : s.checks)
            if (!c.passed) {
                os << "      failed: " << c.name;
                if (!c.detail.empty()) os << " -- " << c.detail;
                os << "\n";
            }
    }
    os << (report.all_passed ? "all suites passed" : "VERIFICATION FAILED");
    return os.str();
}

}  // namespace ruled
