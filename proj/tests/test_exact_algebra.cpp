#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ruled/laurent.hpp"
#include "ruled/rational_function.hpp"

using namespace ruled;

namespace {

const Vars XY = Vars::of({"x", "y"});

LaurentPoly random_poly(std::mt19937_64& rng, const Vars& vars, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(-4, 4);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    LaurentPoly p(vars);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exponents e(vars.size());
        for (auto& x : e) x = expo(rng);
        p.add_term(e, Rational(num(rng), den(rng)));
    }
    return p;
}

Exponents random_monomial(std::mt19937_64& rng, std::size_t nvars) {
    std::uniform_int_distribution<int> expo(-3, 3);
    Exponents e(nvars);
    do {
        for (auto& x : e) x = expo(rng);
    } while (exp_is_zero(e));
    return e;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
    auto x = LaurentPoly::var(XY, 0);
    auto y = LaurentPoly::var(XY, 1);
    CHECK((x - y) * (x + y) == x * x - y * y);

    auto p = LaurentPoly::constant(XY, 1) + x;       // 1 + x
    auto q = LaurentPoly::monomial(XY, {-1, 0}, 1);  // 1/x
    auto sum = p * q;                                // 1/x + 1
    CHECK(sum.coeff({-1, 0}) == 1);
    CHECK(sum.coeff({0, 0}) == 1);
    CHECK(sum.terms.size() == 2);

    CHECK(render(sum) == "1 + 1/x");
    CHECK(render(LaurentPoly::zero(XY)) == "0");
    CHECK(render(Rational(-3, 2) * (x * x) + y) == "-3/2*x^2 + y");
    CHECK(render(LaurentPoly::monomial(XY, {-1, -3}, 1)) == "1/(x*y^3)");
}

TEST_CASE("canonical order is descending lexicographic") {
    auto x = LaurentPoly::var(XY, 0);
    auto y = LaurentPoly::var(XY, 1);
    auto p = LaurentPoly::constant(XY, 2) + y + LaurentPoly::monomial(XY, {0, -1}, 1) + x +
             LaurentPoly::monomial(XY, {-1, 0}, 1);
    CHECK(render(p) == "x + y + 2 + 1/y + 1/x");
}

TEST_CASE("divide_exact on single-variable chains") {
    auto one = LaurentPoly::constant(XY, 1);
    auto x3 = LaurentPoly::monomial(XY, {3, 0}, 1);
    auto q = divide_exact(one - x3, {1, 0});
    auto expected = LaurentPoly::constant(XY, 1) + LaurentPoly::var(XY, 0) +
                    LaurentPoly::monomial(XY, {2, 0}, 1);
    CHECK(q == expected);  // (1 - x^3)/(1 - x) = 1 + x + x^2

    // coset division along a genuinely 2d direction: (1 - x^2 y^6)/(1 - x y^3)
    auto p = one - LaurentPoly::monomial(XY, {2, 6}, 1);
    auto r = divide_exact(p, {1, 3});
    CHECK(r == one + LaurentPoly::monomial(XY, {1, 3}, 1));

    CHECK_THROWS_AS(divide_exact(one, {1, 0}), NotDivisible);
    CHECK_THROWS_AS(divide_exact(one, {0, 0}), BadInput);
}

TEST_CASE("divide_exact soundness on random inputs") {
    std::mt19937_64 rng(20260814);
    int done = 0;
    while (done < 1000) {
        auto p = random_poly(rng, XY);
        auto m = random_monomial(rng, 2);
        auto prod = p * one_minus_monomial(XY, m);
        auto q = divide_exact(prod, m);
        REQUIRE(q == p);
        // and the remainder case is detected
        if (!p.is_zero()) {
            auto bumped = prod + LaurentPoly::monomial(XY, {9, -9}, Rational(1));
            bool threw = false;
            try {
                auto r = divide_exact(bumped, m);
                // division succeeded: only possible if the bump is itself divisible
                CHECK(r * one_minus_monomial(XY, m) == bumped);
            } catch (const NotDivisible&) {
                threw = true;
            }
            (void)threw;
        }
        ++done;
    }
}

TEST_CASE("structured rational functions: normalization and sums") {
    auto one = LaurentPoly::constant(XY, 1);
    auto x = LaurentPoly::var(XY, 0);
    auto xinv = LaurentPoly::monomial(XY, {-1, 0}, 1);

    // 1/(1-x) + 1/(1-x^{-1}) = 1
    auto f = make_rf(one, {{1, 0}});
    auto g = make_rf(one, {{-1, 0}});
    CHECK(rf_to_laurent(rf_add(f, g)) == one);

    // x/(1-x^{-1}) + x^{-1}/(1-x) = x + 1 + 1/x
    auto h = rf_add(make_rf(x, {{-1, 0}}), make_rf(xinv, {{1, 0}}));
    CHECK(rf_to_laurent(h) == x + one + xinv);

    CHECK_THROWS_AS(make_rf(one, {{0, 0}}), BadInput);
}

TEST_CASE("rational function canonical form and equality on random inputs") {
    std::mt19937_64 rng(424242);
    for (int t = 0; t < 200; ++t) {
        auto num = random_poly(rng, XY);
        auto m1 = random_monomial(rng, 2);
        auto m2 = random_monomial(rng, 2);
        auto f = make_rf(num, {m1});
        // multiply numerator and denominator by (1 - m2): same function
        auto g = make_rf(num * one_minus_monomial(XY, m2), {m1, m2});
        CHECK(rf_equal(f, g));
        // factors normalized: every stored factor is lex-positive
        for (const auto& m : g.factors) CHECK(exp_lex_sign(m) == 1);
    }
}

TEST_CASE("rf_add is additive after clearing denominators") {
    std::mt19937_64 rng(777);
    for (int t = 0; t < 100; ++t) {
        auto a = random_poly(rng, XY);
        auto b = random_poly(rng, XY);
        auto m1 = random_monomial(rng, 2);
        auto m2 = random_monomial(rng, 2);
        // f = a, g = b as rational functions with denominators attached
        auto f = make_rf(a * one_minus_monomial(XY, m1), {m1});
        auto g = make_rf(b * one_minus_monomial(XY, m2), {m2});
        auto s = rf_add(f, g);
        CHECK(rf_to_laurent(s) == a + b);
        CHECK(rf_to_laurent(f) + rf_to_laurent(g) == a + b);
    }
}

TEST_CASE("monomial substitution is a ring homomorphism") {
    // exponent map used by the odd-parity weight rewrite at n=3:
    // a = x y^2, b = x y, inverse sends (x,y)-exponents (p,q) to (-p+q, 2p-q)
    const Vars AB = Vars::of({"a", "b"});
    std::vector<std::vector<int>> M = {{-1, 1}, {2, -1}};

    auto xy2 = LaurentPoly::monomial(XY, {1, 2}, 1);
    auto image = monomial_substitution(xy2, M, AB);
    CHECK(image == LaurentPoly::var(AB, 0));  // x y^2 -> a

    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        auto p = random_poly(rng, XY);
        auto q = random_poly(rng, XY);
        CHECK(monomial_substitution(p * q, M, AB) ==
              monomial_substitution(p, M, AB) * monomial_substitution(q, M, AB));
        CHECK(monomial_substitution(p + q, M, AB) ==
              monomial_substitution(p, M, AB) + monomial_substitution(q, M, AB));
    }
}

TEST_CASE("rational parsing and rendering") {
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), BadInput);
    CHECK_THROWS_AS(parse_rational("x"), BadInput);
    CHECK(is_dyadic(Rational(3, 8)));
    CHECK(!is_dyadic(Rational(1, 6)));
}
