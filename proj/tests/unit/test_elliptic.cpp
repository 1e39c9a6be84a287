#include <doctest.h>

#include "etale/elliptic.hpp"
#include "etale/factor.hpp"
#include "oracles.hpp"

using namespace etale;

namespace {

Curve legendre_curve(const Elem& lambda) {
    const Field& F = lambda.field();
    // x (x - 1) (x - lambda)
    Poly f = Poly::x(F) * (Poly::x(F) - Poly::constant(F.one())) *
             (Poly::x(F) - Poly::constant(lambda));
    return Curve::create(F, f);
}

}  // namespace

TEST_CASE("Legendre coefficients") {
    SUBCASE("p = 3, lambda = 2 is supersingular") {
        const Field& F3 = Field::get(3);
        LegendreCoeffs c = legendre_coeffs(F3.from_int(2));
        CHECK(c.c_m.is_zero());  // c_1 = -(lambda + 1) = 0
    }
    SUBCASE("p = 5, lambda = 2: the binomial sums evaluate to 3 and 3") {
        const Field& F5 = Field::get(5);
        LegendreCoeffs c = legendre_coeffs(F5.from_int(2));
        CHECK(c.c_m == F5.from_int(3));   // lambda^2 + 4 lambda + 1 = 13
        CHECK(c.c_m1 == F5.from_int(3));  // -(2 lambda^2 + 2 lambda) = -12
    }
    SUBCASE("rejects lambda in {0, 1}") {
        const Field& F5 = Field::get(5);
        CHECK_THROWS_AS(legendre_coeffs(F5.zero()), Error);
        CHECK_THROWS_AS(legendre_coeffs(F5.one()), Error);
    }
}

TEST_CASE("Legendre coefficients agree with the Cartier matrices") {
    for (i64 p : {3, 5, 7, 11, 13}) {
        const Field& F2 = Field::get(p, 2);
        for (i64 i = 0; i < F2.q(); ++i) {
            Elem lambda = F2.element_from_index(i);
            if (lambda.is_zero() || lambda.is_one()) continue;
            LegendreCoeffs c = legendre_coeffs(lambda);
            Curve E = legendre_curve(lambda);
            // C(dx/y) coefficient on Omega(0)
            CHECK(cartier_matrix(E, 0).a.at(0, 0) == c.c_m);
            // C(x dx/y) coefficient on Omega(-2P)
            SemilinearMap M = cartier_matrix(E, -2);
            REQUIRE(M.a.rows() == 1);
            REQUIRE(M.a.cols() == 2);
            CHECK(M.a.at(0, 0) == c.c_m);
            CHECK(M.a.at(0, 1) == c.c_m1);
        }
    }
}

TEST_CASE("supersingular existence is equivalent to the cover criterion") {
    for (i64 p : {3, 5, 7}) {
        const Field& F2 = Field::get(p, 2);
        for (i64 i = 0; i < F2.q(); ++i) {
            Elem lambda = F2.element_from_index(i);
            if (lambda.is_zero() || lambda.is_one()) continue;
            Curve E = legendre_curve(lambda);
            bool ss = legendre_coeffs(lambda).c_m.is_zero();
            CHECK(cover_exists(E) == ss);
            if (ss) {
                CHECK(minimal_degree_linalg(E) == p);
                CHECK(build_cover(E).degree == p);
            }
        }
    }
}

TEST_CASE("Deuring polynomial coprimality") {
    auto [c2, c1] = deuring_pair(5);
    CHECK(c2 == poly_parse("x^2 + 4*x + 1", Field::get(5)));
    CHECK(c1 == poly_parse("3*x^2 + 3*x", Field::get(5)));
    CHECK(deuring_coprimality(5));
    CHECK(deuring_coprimality(3));
    for (i64 p = 3; p <= 50; p += 2) {
        bool prime = true;
        for (i64 d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (prime) CHECK(deuring_coprimality(p));
    }
}

TEST_CASE("supersingular j-invariants") {
    SUBCASE("table columns") {
        auto idx = [](const std::vector<Elem>& v) {
            std::vector<i64> out;
            for (const auto& e : v) out.push_back(e.index());
            return out;
        };
        CHECK(idx(supersingular_j_list(3)) == std::vector<i64>{0});
        CHECK(idx(supersingular_j_list(5)) == std::vector<i64>{0});
        CHECK(idx(supersingular_j_list(7)) == std::vector<i64>{6});
        CHECK(idx(supersingular_j_list(11)) == std::vector<i64>{0, 1});
        CHECK(idx(supersingular_j_list(13)) == std::vector<i64>{5});
        CHECK(idx(supersingular_j_list(17)) == std::vector<i64>{0, 8});
    }
    SUBCASE("every j lies in F_{p^2} by construction; counts match point counting") {
        for (i64 p : {3, 5, 7, 11, 13, 17}) {
            std::vector<i64> got;
            for (const Elem& j : supersingular_j_list(p)) got.push_back(j.index());
            CHECK(got == oracles::supersingular_j_indices_by_counting(p));
        }
    }
}

TEST_CASE("ramification shape of the canonical degree-p cover") {
    const Field& F5 = Field::get(5);
    CHECK(canonical_cover_classify(F5.from_int(2)) == RamificationShape::two_branch_points);
    const Field& F3 = Field::get(3);
    CHECK(canonical_cover_classify(F3.from_int(2)) ==
          RamificationShape::supersingular_one_point);
    SUBCASE("a three-branch-point example exists over F_7") {
        const Field& F7 = Field::get(7);
        bool found = false;
        for (i64 i = 2; i < 7 && !found; ++i) {
            Elem lambda = F7.from_int(i);
            if (canonical_cover_classify(lambda) == RamificationShape::three_branch_points) {
                LegendreCoeffs c = legendre_coeffs(lambda);
                REQUIRE(!c.c_m.is_zero());
                Elem ratio = c.c_m1 / c.c_m;
                CHECK(!ratio.is_zero());
                CHECK(!ratio.is_one());
                CHECK(ratio != lambda);
                found = true;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("table verification") {
    TableCertificate t11 = verify_table(11, "x^3 - 1", "x^4 + 6*x");
    CHECK(t11.listed.degree == 11);
    CHECK(t11.proportional);
    CHECK(t11.j.index() == 0);
    TableCertificate t13 = verify_table(13, "x^3 + x + 4", "x^5 + 6*x^3 + 11*x^2 + 2*x + 3");
    CHECK(t13.listed.degree == 13);
    CHECK(t13.proportional);
    CHECK(t13.j.index() == 5);
    TableCertificate t17 =
        verify_table(17, "x^3 + x - 1", "x^7 + 8*x^5 + 9*x^4 + 11*x^3 + 12*x^2 - x + 2");
    CHECK(t17.listed.degree == 17);
    CHECK(t17.proportional);
    CHECK(t17.j.index() == 8);
    // every row of the builtin table verifies
    for (const TableRow& row : table_rows()) {
        TableCertificate cert = verify_table(row.p, row.f_text, row.b_text);
        CHECK(cert.listed.degree == row.p);
        CHECK(cert.proportional);
    }
}
