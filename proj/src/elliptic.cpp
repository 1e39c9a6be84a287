#include "etale/elliptic.hpp"

#include <algorithm>

#include "etale/factor.hpp"

namespace etale {

namespace {

// binom(m, k) for m < p, exact in 64-bit for the sizes in play
i64 binom(i64 m, i64 k) {
    if (k < 0 || k > m) return 0;
    k = std::min(k, m - k);
    i64 r = 1;
    for (i64 i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

void check_lambda(const Elem& lambda) {
    if (lambda.is_zero() || lambda.is_one())
        throw Error(errc::bad_lambda, "lambda must avoid 0 and 1");
    if (lambda.field().p() == 2) throw Error(errc::bad_lambda, "odd characteristic required");
}

}  // namespace

LegendreCoeffs legendre_coeffs(const Elem& lambda) {
    check_lambda(lambda);
    const Field& F = lambda.field();
    const i64 m = (F.p() - 1) / 2;
    auto c_n = [&](i64 n) {
        Elem sum = F.zero();
        for (i64 i = 0; i <= n; ++i)
            sum += F.from_int(binom(m, i) * binom(m, n - i)) * lambda.pow(m - i);
        return n % 2 == 0 ? sum : -sum;
    };
    return {c_n(m), c_n(m - 1)};
}

std::pair<Poly, Poly> deuring_pair(i64 p) {
    const Field& F = Field::get(p);
    const i64 m = (p - 1) / 2;
    auto c_n = [&](i64 n) {
        Poly r = Poly::zero(F);
        for (i64 i = 0; i <= n; ++i) {
            Elem coeff = F.from_int(binom(m, i) * binom(m, n - i));
            if (n % 2 == 1) coeff = -coeff;
            r += Poly::monomial(F, static_cast<int>(m - i), coeff);
        }
        return r;
    };
    return {c_n(m), c_n(m - 1)};
}

bool deuring_coprimality(i64 p) {
    auto [cm, cm1] = deuring_pair(p);
    return gcd(cm, cm1).degree() == 0;
}

Elem j_from_lambda(const Elem& lambda) {
    check_lambda(lambda);
    const Field& F = lambda.field();
    Elem s = lambda * lambda - lambda + F.one();
    Elem d = lambda * lambda * (lambda - F.one()) * (lambda - F.one());
    return F.from_int(256) * s * s * s / d;
}

Elem j_short_weierstrass(const Elem& A, const Elem& B) {
    const Field& F = A.field();
    Elem a3 = F.from_int(4) * A * A * A;
    Elem disc = a3 + F.from_int(27) * B * B;
    if (disc.is_zero()) throw Error(errc::invalid_argument, "singular cubic");
    return F.from_int(1728) * a3 / disc;
}

std::vector<Elem> supersingular_j_list(i64 p) {
    if (p < 3) throw Error(errc::invalid_argument, "odd characteristic required");
    const Field& F2 = Field::get(p, 2);
    Poly cm = deuring_pair(p).first;
    std::vector<i64> v;
    for (int k = 0; k <= cm.degree(); ++k) v.push_back(cm.coeff(k).coeffs()[0]);
    Poly cm2 = Poly::from_ints(F2, std::move(v));
    std::vector<Elem> js;
    for (const Elem& lambda : roots(cm2)) {
        Elem j = j_from_lambda(lambda);
        if (std::find(js.begin(), js.end(), j) == js.end()) js.push_back(j);
    }
    std::sort(js.begin(), js.end(), [](const Elem& a, const Elem& b) {
        return a.index() < b.index();
    });
    return js;
}

RamificationShape canonical_cover_classify(const Elem& lambda) {
    LegendreCoeffs c = legendre_coeffs(lambda);
    if (c.c_m.is_zero()) return RamificationShape::supersingular_one_point;
    Elem ratio = c.c_m1 / c.c_m;
    if (ratio.is_zero() || ratio.is_one() || ratio == lambda)
        return RamificationShape::two_branch_points;
    return RamificationShape::three_branch_points;
}

std::string ramification_shape_name(RamificationShape s) {
    switch (s) {
        case RamificationShape::supersingular_one_point: return "supersingular_one_point";
        case RamificationShape::two_branch_points: return "two_branch_points";
        case RamificationShape::three_branch_points: return "three_branch_points";
    }
    return "?";
}

const std::array<TableRow, 8>& table_rows() {
    static const std::array<TableRow, 8> rows = {{
        {3, "x^3 - x", "1"},
        {5, "x^3 - 1", "x"},
        {7, "x^3 - x", "x^2 + 4"},
        {11, "x^3 - 1", "x^4 + 6*x"},
        {11, "x^3 - x", "x^4 + 6*x^2 + 10"},
        {13, "x^3 + x + 4", "x^5 + 6*x^3 + 11*x^2 + 2*x + 3"},
        {17, "x^3 - 1", "x^7 + 9*x^4 + 11*x"},
        {17, "x^3 + x - 1", "x^7 + 8*x^5 + 9*x^4 + 11*x^3 + 12*x^2 - x + 2"},
    }};
    return rows;
}

TableCertificate verify_table(i64 p, const std::string& f_text, const std::string& b_text) {
    const Field& F = Field::get(p);
    Poly f = poly_parse(f_text, F);
    Curve curve = Curve::create(F, f);
    if (curve.genus() != 1) throw Error(errc::invalid_argument, "table rows are elliptic");
    Poly b = poly_parse(b_text, F);
    AffineFunction t(curve, Poly::zero(F), b);
    EtaleCertificate listed = verify_etale_cover(t);
    if (!listed.accepted)
        throw Error(errc::invalid_argument, "listed cover rejected: " + listed.rejection);
    if (listed.degree != p)
        throw Error(errc::invalid_argument, "listed cover does not have degree p");
    CoverCertificate constructed = build_cover(curve);
    bool proportional = constructed.t.b() == b.monic();
    if (!f.coeff(2).is_zero())
        throw Error(errc::invalid_argument, "expected a depressed cubic");
    Elem j = j_short_weierstrass(f.coeff(1), f.coeff(0));
    return {curve, j, CoverCertificate{curve, t, listed.degree, listed.dt_constant, true},
            constructed, proportional};
}

}  // namespace etale
