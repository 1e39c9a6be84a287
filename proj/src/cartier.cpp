#include "etale/cartier.hpp"

#include <cassert>

namespace etale {

i64 iota(i64 m, i64 p) { return floordiv(m, p); }

i64 sigma(i64 n, i64 p) {
    i64 r = ((n % p) + p) % p;
    if (r == 0) return -n;
    if (r == p - 1) return -n - 2;
    return -n - 1;
}

Poly half_power(const Curve& curve) {
    return curve.f().pow((curve.field().p() - 1) / 2);
}

MeroForm cartier_of_form(const Curve& curve, const MeroForm& omega) {
    if (omega.pole_bound() > 0)
        throw Error(errc::invalid_argument, "Cartier operator is only taken on Omega(mP), m <= 0");
    const Field& F = curve.field();
    const i64 p = F.p();
    const i64 mc = iota(omega.pole_bound(), p);

    // u dx/y = u h dx / y^p, so C picks the coefficients of u*h in degrees
    // kp - 1 and divides the exponent by p.
    Poly uh = omega.u() * half_power(curve);
    std::vector<Elem> ucoef;
    for (i64 k = 1; k * p - 1 <= uh.degree(); ++k)
        ucoef.push_back(uh.coeff(static_cast<int>(k * p - 1)).frob_inv());
    Poly u_out(F, std::move(ucoef));

    std::vector<Elem> wcoef;
    for (int j = static_cast<int>(p) - 1; j <= omega.w().degree(); j += static_cast<int>(p))
        wcoef.push_back(omega.w().coeff(j).frob_inv());
    Poly w_out(F, std::move(wcoef));

    return MeroForm(curve, mc, std::move(u_out), std::move(w_out));
}

namespace {

std::string u_label(int n) { return "dx/y*x^" + std::to_string(n - 1); }
std::string w_label(int j) { return "dx*x^" + std::to_string(j); }

std::vector<std::string> basis_labels(const Curve& curve, i64 m) {
    std::vector<std::string> ls;
    for (int n = 1; n <= MeroForm::u_count(curve, m); ++n) ls.push_back(u_label(n));
    for (int j = 0; j < MeroForm::w_count(curve, m); ++j) ls.push_back(w_label(j));
    return ls;
}

}  // namespace

SemilinearMap cartier_matrix(const Curve& curve, i64 m) {
    if (m > 0)
        throw Error(errc::invalid_argument, "Cartier matrix is only defined for m <= 0");
    const Field& F = curve.field();
    const i64 p = F.p();
    const i64 mc = iota(m, p);
    const int dim_dom = MeroForm::dim(curve, m);
    const int dim_cod = MeroForm::dim(curve, mc);
    const int uc_dom = MeroForm::u_count(curve, m);
    const int uc_cod = MeroForm::u_count(curve, mc);
    const Poly h = half_power(curve);

    SemilinearMap M{m, mc, Mat(F, dim_cod, dim_dom), basis_labels(curve, m),
                    basis_labels(curve, mc)};
    // columns over the dx/y family: entries [x^(j-1) h]_{kp-1}
    for (int j = 1; j <= uc_dom; ++j) {
        for (int k = 1; k <= uc_cod; ++k) {
            int deg = static_cast<int>(k * p - 1) - (j - 1);
            M.a.at(k - 1, j - 1) = h.coeff(deg);
        }
    }
    // columns over the dx family: x^j dx maps to x^((j+1)/p - 1) dx
    for (int j = 0; j < MeroForm::w_count(curve, m); ++j) {
        if ((j + 1) % p == 0) {
            int k = (j + 1) / static_cast<int>(p) - 1;  // target exponent
            assert(k < MeroForm::w_count(curve, mc));
            M.a.at(uc_cod + k, uc_dom + j) = F.one();
        }
    }
    return M;
}

namespace {

// A^(p^(g-1)) * ... * A^(p) * A for the Cartier-Manin matrix A; its rank is
// the p-rank. The reversed twist order must give the same rank, which is
// asserted as a convention guard.
Mat iterated_cartier(const Curve& curve) {
    Mat A = cartier_matrix(curve, 0).a;
    const int g = curve.genus();
    Mat left = A, right = A;
    for (int k = 1; k < g; ++k) {
        left = A.frob_power(k) * left;
        right = right * A.frob_power(k);
    }
    assert(rank(left) == rank(right));
    return left;
}

}  // namespace

int p_rank(const Curve& curve) { return rank(iterated_cartier(curve)); }

Classification classify(const Curve& curve) {
    Mat A = cartier_matrix(curve, 0).a;
    if (A.is_zero()) return {CurveClass::superspecial, 0};
    Mat it = iterated_cartier(curve);
    if (it.is_zero()) return {CurveClass::supersingular, 0};
    int sigma = rank(it);
    if (sigma == curve.genus()) return {CurveClass::ordinary, sigma};
    return {CurveClass::intermediate, sigma};
}

std::string curve_class_name(const Classification& c) {
    switch (c.kind) {
        case CurveClass::ordinary: return "ordinary";
        case CurveClass::supersingular: return "supersingular";
        case CurveClass::superspecial: return "superspecial";
        case CurveClass::intermediate:
            return "intermediate(" + std::to_string(c.sigma) + ")";
    }
    return "?";
}

bool cover_exists(const Curve& curve) {
    const Poly h = half_power(curve);
    const i64 p = curve.field().p();
    for (int i = 1; i <= curve.genus(); ++i)
        if (!h.coeff(static_cast<int>(i * p - 1)).is_zero()) return false;
    // necessary conditions: p does not divide 2g - 1, and the curve is not
    // ordinary
    assert((2 * curve.genus() - 1) % p != 0);
    assert(classify(curve).kind != CurveClass::ordinary);
    return true;
}

int coker_dim(const Curve& curve, i64 m) {
    SemilinearMap M = cartier_matrix(curve, m);
    return MeroForm::dim(curve, M.m_cod) - rank(M.a);
}

Subspace regular_form_span(const Curve& curve, i64 n, i64 m_cod) {
    if (n < 0) throw Error(errc::invalid_argument, "regular_form_span needs n >= 0");
    const Field& F = curve.field();
    const int ambient = MeroForm::dim(curve, m_cod);
    const int count =
        static_cast<int>(std::max<i64>(0, floordiv(2 * curve.genus() - n, 2)));
    Mat rows(F, count, ambient);
    for (int i = 1; i <= count; ++i) rows.at(i - 1, i - 1) = F.one();
    return Subspace::row_space(rows);
}

i64 minimal_degree_linalg(const Curve& curve) {
    if (!cover_exists(curve))
        throw Error(errc::no_cover, "no etale cover of the affine line exists");
    const i64 p = curve.field().p();
    const int g = curve.genus();
    SemilinearMap M = cartier_matrix(curve, 1 - 2 * g);
    Subspace image = Subspace::column_space(M.a);
    for (i64 n = 1; n <= 2 * g - 1; ++n) {
        if (image.contains(regular_form_span(curve, n, M.m_cod))) {
            assert(curve.gaps().count(static_cast<int>(n)) == 1);
            return n * p;
        }
    }
    // unreachable: Omega((2g-1) P) = 0 is contained in any subspace
    throw Error(errc::invalid_argument, "containment search failed");
}

std::vector<i64> admissible_degrees(const Curve& curve, i64 bound) {
    const i64 p = curve.field().p();
    const i64 n0 = minimal_degree_linalg(curve) / p;  // throws no_cover if none
    std::vector<i64> out;
    if (n0 * p <= bound) out.push_back(n0 * p);
    for (i64 n = n0 + 1; n * p <= bound; ++n)
        if (curve.gaps().count(static_cast<int>(n)) == 0) out.push_back(n * p);
    return out;
}

}  // namespace etale
