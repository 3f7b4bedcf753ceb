#include <doctest.h>

#include "equising/bipoly.hpp"
#include "equising/poly_text.hpp"
#include "support/oracles.hpp"

using namespace equising;

TEST_CASE("parsing matches hand expansion") {
    const BiPoly p = parse_poly("(y^2-x^3)^2-x^11*y");
    CHECK(p == parse_poly("y^4-2*x^3*y^2-x^11*y+x^6"));
    CHECK(to_string(p) == "y^4-2*x^3*y^2-x^11*y+x^6");
    CHECK(p.y_degree() == 4);
}

TEST_CASE("parsing corner cases") {
    CHECK(parse_poly("0").is_zero());
    const BiPoly q = parse_poly("y^2 + (3/2)x");
    CHECK(q.coeff(1, 0) == Rat(3, 2));
    CHECK(q.coeff(0, 2) == 1);
    CHECK(to_string(q) == "y^2+3/2*x");
    // juxtaposition and leading sign
    CHECK(parse_poly("-x y") == parse_poly("-(x*y)"));
    CHECK(parse_poly("2(x+y)") == parse_poly("2*x+2*y"));
    CHECK(parse_poly("x^2y^3") == BiPoly::monomial(2, 3, Rat(1)));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_poly("y^2 + z"), ParseError);
    CHECK_THROWS_AS(parse_poly("(y^2"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    try {
        parse_poly("y^2 + z");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("parse guards: nesting depth and y-degree cap") {
    const std::string deep(2000, '(');
    CHECK_THROWS_AS(parse_poly(deep + "y" + std::string(2000, ')')), ParseError);
    CHECK(parse_poly("((((y))))") == parse_poly("y"));
    // capped parse rejects before expanding
    CHECK_THROWS_AS(parse_poly("(y^2-x^3)^100000", 4096), ParseError);
    CHECK_THROWS_AS(parse_poly("y^5000", 4096), ParseError);
    CHECK(parse_poly("y^5000", 5000).y_degree() == 5000);
    CHECK(parse_poly("(y^2-x^3)^2", 4096) == parse_poly("(y^2-x^3)^2"));
}

TEST_CASE("print-parse round trip on random polynomials") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const BiPoly p = oracles::random_poly(seed, 6, 9, 8);
        CHECK(parse_poly(to_string(p)) == p);
    }
}

TEST_CASE("ring arithmetic") {
    const BiPoly a = parse_poly("y^2-x^3"), b = parse_poly("y^2+x^3");
    CHECK(a * b == parse_poly("y^4-x^6"));
    CHECK(a.pow(2) == parse_poly("y^4-2*x^3*y^2+x^6"));
    CHECK(a.derivative_y() == parse_poly("2y"));
    CHECK(a.derivative_x() == parse_poly("-3x^2"));
}

TEST_CASE("derivative is a derivation: (p^2)_x = 2 p p_x") {
    for (std::uint64_t seed = 50; seed < 62; ++seed) {
        const BiPoly p = oracles::random_poly(seed, 5, 6, 6);
        CHECK(p.pow(2).derivative_x() == p * p.derivative_x() * Rat(2));
        CHECK(p.pow(2).derivative_y() == p * p.derivative_y() * Rat(2));
    }
}

TEST_CASE("y_divmod reconstructs exactly") {
    const BiPoly a = parse_poly("(y^2-x^3)^2-x^11*y");
    const BiPoly g = parse_poly("y^2-x^3");
    const auto [q, r] = y_divmod(a, g);
    CHECK(q == g);
    CHECK(r == parse_poly("-x^11*y"));
    CHECK(q * g + r == a);

    const auto [q2, r2] = y_divmod(parse_poly("y"), parse_poly("y"));
    CHECK(q2 == BiPoly(Rat(1)));
    CHECK(r2.is_zero());

    const auto [q3, r3] = y_divmod(parse_poly("x^5"), parse_poly("y"));
    CHECK(q3.is_zero());
    CHECK(r3 == parse_poly("x^5"));

    CHECK_THROWS_AS(y_divmod(a, parse_poly("2y")), std::invalid_argument);

    for (std::uint64_t seed = 100; seed < 112; ++seed) {
        const BiPoly p = oracles::random_poly(seed, 7, 6, 8);
        const BiPoly mon = BiPoly::var_y().pow(2) + oracles::random_poly(seed + 7, 2, 4, 3);
        const auto [qq, rr] = y_divmod(p, mon);
        CHECK(qq * mon + rr == p);
        CHECK(rr.y_degree() < mon.y_degree());
    }
}

TEST_CASE("adic expansion: digits and reconstruction") {
    // context <2,3>: single digit with coefficient x^2
    const std::vector<BiPoly> basis23{parse_poly("y"), parse_poly("y^2-x^3")};
    const AdicExpansion e1 = adic_expand(parse_poly("x^2*y"), basis23);
    REQUIRE(e1.digits.size() == 1);
    CHECK(e1.digits[0].coeff == XPoly::monomial(2, Rat(1)));
    CHECK(e1.digits[0].exponents == std::vector<long long>{1, 0});

    // G_3 of <4,6,13> against (y, y^2-x^3)
    const BiPoly g3 = parse_poly("(y^2-x^3)^2-x^5*y");
    const AdicExpansion e2 = adic_expand(g3, basis23);
    REQUIRE(e2.digits.size() == 2);
    CHECK(e2.reconstruct() == g3);
    bool saw_square = false, saw_linear = false;
    for (const auto& d : e2.digits) {
        if (d.exponents == std::vector<long long>{0, 2}) {
            CHECK(d.coeff == XPoly(Rat(1)));
            saw_square = true;
        }
        if (d.exponents == std::vector<long long>{1, 0}) {
            CHECK(d.coeff == XPoly::monomial(5, Rat(-1)));
            saw_linear = true;
        }
    }
    CHECK(saw_square);
    CHECK(saw_linear);

    CHECK(adic_expand(BiPoly(), basis23).digits.empty());
    CHECK_THROWS_AS(adic_expand(g3, std::vector<BiPoly>{parse_poly("y^2-x^3")}),
                    std::invalid_argument);

    for (std::uint64_t seed = 200; seed < 208; ++seed) {
        const BiPoly p = oracles::random_poly(seed, 8, 5, 10);
        CHECK(adic_expand(p, basis23).reconstruct() == p);
    }
}

TEST_CASE("x_order") {
    CHECK(parse_poly("x^3+x^5").y_coeff(0).x_order() == XOrder::of(3));
    CHECK(XPoly().x_order() == XOrder::infinity());
    CHECK(XPoly(Rat(7)).x_order() == XOrder::of(0));
    CHECK(XOrder::of(5) < XOrder::infinity());
    CHECK(XOrder::infinity() == XOrder::infinity());
    CHECK_THROWS_AS(XOrder::infinity().value(), std::logic_error);
}

TEST_CASE("tschirnhausen normalization") {
    CHECK(normalize_tschirnhausen(parse_poly("y^2+2x*y+x^2")) == parse_poly("y^2"));
    const BiPoly shifted = normalize_tschirnhausen(parse_poly("y^3-3y^2+y"));
    CHECK(shifted.y_coeff(2).is_zero());
    CHECK(shifted == parse_poly("y^3-2y-1"));
    CHECK(normalize_tschirnhausen(parse_poly("y^2-x^3")) == parse_poly("y^2-x^3"));
    CHECK_THROWS_AS(normalize_tschirnhausen(parse_poly("2y^2-x")), std::invalid_argument);
}

TEST_CASE("approximate roots") {
    const BiPoly f = parse_poly("(y^2-x^3)^2-x^11*y");
    CHECK(approximate_root(f, Int(2)) == parse_poly("y^2-x^3"));
    CHECK(approximate_root(f, Int(4)) == parse_poly("y"));
    CHECK(approximate_root(f, Int(1)) == f);
    CHECK_THROWS_AS(approximate_root(f, Int(3)), std::invalid_argument);

    // Def 1.4 ii holds exactly: re-expand and check the second digit is zero.
    for (const Int& d : {Int(2), Int(4)}) {
        const BiPoly g = approximate_root(f, d);
        const auto digits = q_adic_digits(f, g);
        const long long top = static_cast<long long>(digits.size()) - 1;
        REQUIRE(top == d.get_si());
        CHECK(digits[top - 1].is_zero());  // alpha_1 = 0
        // idempotence: recomputing from f gives the identical polynomial
        CHECK(approximate_root(f, d) == g);
    }
}
