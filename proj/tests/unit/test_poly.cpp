#include <doctest.h>

#include <random>

#include "etale/poly.hpp"

using namespace etale;

namespace {

Poly random_poly(const Field& F, int max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<i64> dist(0, F.q() - 1);
    std::uniform_int_distribution<int> ddist(0, max_deg);
    int d = ddist(rng);
    std::vector<Elem> c;
    for (int i = 0; i <= d; ++i) c.push_back(F.element_from_index(dist(rng)));
    return Poly(F, std::move(c));
}

}  // namespace

TEST_CASE("ring basics") {
    const Field& F7 = Field::get(7);
    Poly f = Poly::from_ints(F7, {6, 0, 1});       // x^2 + 6
    Poly g = Poly::from_ints(F7, {1, 1});          // x + 1
    CHECK((f * g) == Poly::from_ints(F7, {6, 6, 1, 1}));
    auto [q, r] = (f * g + Poly::from_ints(F7, {3})).divrem(f);
    CHECK(q == g);
    CHECK(r == Poly::from_ints(F7, {3}));
    CHECK(f.eval(F7.from_int(2)) == F7.from_int(3));
    CHECK(Poly::from_ints(F7, {0}).is_zero());
    CHECK(Poly::zero(F7).degree() == -1);
}

TEST_CASE("gcd and derivative") {
    const Field& F5 = Field::get(5);
    Poly f = Poly::from_ints(F5, {0, 1}) * Poly::from_ints(F5, {1, 1}) *
             Poly::from_ints(F5, {1, 1});
    Poly d = f.derivative();
    CHECK(gcd(f, d) == Poly::from_ints(F5, {1, 1}));
    // derivative of x^5 vanishes
    CHECK(Poly::monomial(F5, 5, F5.one()).derivative().is_zero());
}

TEST_CASE("antiderivative") {
    SUBCASE("obstruction in degree p-1") {
        const Field& F5 = Field::get(5);
        CHECK_THROWS_AS(Poly::monomial(F5, 4, F5.one()).antiderivative(), Error);
    }
    SUBCASE("constant integrates to x") {
        const Field& F7 = Field::get(7);
        CHECK(Poly::from_ints(F7, {1}).antiderivative() == Poly::x(F7));
    }
    SUBCASE("(x^3 - x)^3 over F_7, derivative recovers the input") {
        const Field& F7 = Field::get(7);
        Poly h = Poly::from_ints(F7, {0, 6, 0, 1}).pow(3);
        Poly H = h.antiderivative();
        CHECK(H.degree() == 10);
        CHECK(H.coeff(0).is_zero());
        CHECK(H.derivative() == h);
    }
    SUBCASE("succeeds exactly when no coefficient sits in degree -1 mod p") {
        const Field& F3 = Field::get(3);
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 300; ++trial) {
            Poly h = random_poly(F3, 9, rng);
            bool obstructed = false;
            for (int k = 0; k <= h.degree(); ++k)
                if ((k + 1) % 3 == 0 && !h.coeff(k).is_zero()) obstructed = true;
            if (obstructed) {
                CHECK_THROWS_AS(h.antiderivative(), Error);
            } else {
                CHECK(h.antiderivative().derivative() == h);
            }
        }
    }
}

TEST_CASE("parser reads the grammar") {
    const Field& F7 = Field::get(7);
    CHECK(poly_parse("x^3 - x", F7) == Poly::from_ints(F7, {0, 6, 0, 1}));
    const Field& F5 = Field::get(5);
    CHECK(poly_parse("(x+1)^2", F5) == Poly::from_ints(F5, {1, 2, 1}));
    CHECK(poly_parse("2*x^2+3*x+4", F5) == Poly::from_ints(F5, {4, 3, 2}));
    CHECK(poly_parse(" - x + 1 ", F5) == Poly::from_ints(F5, {1, -1}));
    CHECK(poly_parse("-3", F5) == Poly::from_ints(F5, {2}));
    CHECK(poly_parse("x*x*x", F5) == Poly::monomial(F5, 3, F5.one()));
    CHECK(poly_parse("0", F5).is_zero());
}

TEST_CASE("parser rejections") {
    const Field& F5 = Field::get(5);
    SUBCASE("double caret") {
        try {
            poly_parse("x^^2", F5);
            FAIL("expected syntax error");
        } catch (const Error& e) {
            CHECK(e.code() == errc::syntax_error);
            CHECK(e.offset() == 2);
        }
    }
    SUBCASE("wrong variable") {
        try {
            poly_parse("x + y", F5);
            FAIL("expected wrong variable");
        } catch (const Error& e) {
            CHECK(e.code() == errc::wrong_variable);
            CHECK(e.offset() == 4);
        }
    }
    SUBCASE("unbalanced parens") {
        CHECK_THROWS_AS(poly_parse("(x+1", F5), Error);
        CHECK_THROWS_AS(poly_parse("x+1)", F5), Error);
        CHECK_THROWS_AS(poly_parse("", F5), Error);
        CHECK_THROWS_AS(poly_parse("x^-2", F5), Error);
    }
    SUBCASE("multi-letter identifier") {
        CHECK_THROWS_AS(poly_parse("xy", F5), Error);
    }
}

TEST_CASE("canonical printing round-trips through the parser") {
    SUBCASE("fixed examples") {
        const Field& F7 = Field::get(7);
        CHECK(Poly::from_ints(F7, {4, 0, 2, 0, 0, 1}).str() == "x^5 + 2*x^2 + 4");
        CHECK(Poly::from_ints(F7, {0, 6, 0, 1}).str() == "x^3 + 6*x");
        CHECK(Poly::zero(F7).str() == "0");
        CHECK(Poly::from_ints(F7, {0, 1}).str() == "x");
    }
    SUBCASE("random polynomials over prime and extension fields") {
        std::mt19937_64 rng(23);
        for (auto [p, m] : {std::pair<i64, int>{5, 1}, {3, 2}, {5, 2}}) {
            const Field& F = Field::get(p, m);
            for (int trial = 0; trial < 200; ++trial) {
                Poly f = random_poly(F, 6, rng);
                CHECK(poly_parse(f.str(), F) == f);
            }
        }
    }
}

TEST_CASE("element parsing") {
    const Field& F9 = Field::get(3, 2);
    CHECK(parse_element("t+1", F9) == F9.element({1, 1}));
    CHECK(parse_element("t^2", F9) == F9.from_int(-1));
    CHECK(parse_element("2", F9) == F9.from_int(2));
    const Field& F5 = Field::get(5);
    CHECK(parse_element("-1", F5) == F5.from_int(4));
    CHECK_THROWS_AS(parse_element("t", F5), Error);
    // extension coefficients print in parentheses and round-trip
    Poly f(F9, {F9.gen() + F9.one(), F9.gen()});
    CHECK(poly_parse(f.str(), F9) == f);
}
