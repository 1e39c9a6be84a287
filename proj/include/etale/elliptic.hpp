#ifndef ETALE_ELLIPTIC_HPP
#define ETALE_ELLIPTIC_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "etale/covers.hpp"

namespace etale {

// Coefficients of the Cartier action on the Legendre curve
// y^2 = x(x-1)(x-lambda):
//   c_n = (-1)^n sum_i binom(m,i) binom(m,n-i) lambda^(m-i),  m = (p-1)/2.
// C(dx/y) = F^{-1}(c_m) dx/y and C(x dx/y) = F^{-1}(c_{m-1}) dx/y.
struct LegendreCoeffs {
    Elem c_m;
    Elem c_m1;
};
LegendreCoeffs legendre_coeffs(const Elem& lambda);

// c_m and c_{m-1} as polynomials in lambda over F_p.
std::pair<Poly, Poly> deuring_pair(i64 p);

// gcd(c_m, c_{m-1}) = 1 over F_p[lambda].
bool deuring_coprimality(i64 p);

// j = 2^8 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)
Elem j_from_lambda(const Elem& lambda);
// j of y^2 = x^3 + A x + B (characteristic >= 3)
Elem j_short_weierstrass(const Elem& A, const Elem& B);

// All supersingular j-invariants in F_{p^2}: the images of the roots of the
// Deuring polynomial c_m(lambda), deduplicated and sorted by element index.
std::vector<Elem> supersingular_j_list(i64 p);

// Shape of the canonical degree-p cover E -> P^1 attached to the kernel form
// (c_m x - c_{m-1}) dx/y: ramified only above one point in the supersingular
// case; otherwise two or three branch points depending on whether
// c = c_{m-1}/c_m hits {0, 1, lambda}.
enum class RamificationShape { supersingular_one_point, two_branch_points, three_branch_points };
RamificationShape canonical_cover_classify(const Elem& lambda);
std::string ramification_shape_name(RamificationShape s);

// The supersingular curves and degree-p covers for odd p <= 17.
struct TableRow {
    i64 p;
    const char* f_text;  // y^2 = f(x)
    const char* b_text;  // cover t = b(x) y
};
const std::array<TableRow, 8>& table_rows();

// Verification record for one table row.
struct TableCertificate {
    Curve curve;
    Elem j;
    CoverCertificate listed;      // the listed cover, re-verified
    CoverCertificate constructed; // the cover built from scratch
    bool proportional;            // constructed b is a scalar multiple of listed b
};
TableCertificate verify_table(i64 p, const std::string& f_text, const std::string& b_text);

}  // namespace etale

#endif
