#include "etale/covers.hpp"

#include <cassert>

#include "etale/factor.hpp"

namespace etale {

Poly build_H(const Curve& curve) {
    if (!cover_exists(curve))
        throw Error(errc::no_cover, "no etale cover of the affine line exists");
    Poly H = half_power(curve).antiderivative();
    assert(H.degree() ==
           (2 * curve.genus() + 1) * static_cast<int>(curve.field().p() - 1) / 2 + 1);
    return H;
}

Poly build_H1(const Curve& curve, const Poly& H) {
    const Field& F = curve.field();
    const i64 p = F.p();
    Poly s = pth_root_in_quotient(H % curve.f(), curve.f());
    Poly H1 = H - s.pow(p);
    // certifying checks: the correction vanishes to order (p+1)/2 at every
    // root of f, and differentiation recovers h
    Poly fp = curve.f().pow((p + 1) / 2);
    if (!(H1 % fp).is_zero())
        throw Error(errc::invalid_argument, "cover correction lost divisibility by f^((p+1)/2)");
    if (H1.derivative() != half_power(curve))
        throw Error(errc::invalid_argument, "cover correction changed the derivative");
    return H1;
}

CoverCertificate build_cover(const Curve& curve) {
    const Field& F = curve.field();
    const i64 p = F.p();
    const int g = curve.genus();
    Poly H = build_H(curve);
    Poly H1 = build_H1(curve, H);
    Poly b = H1.exact_div(curve.f().pow((p + 1) / 2));
    Elem lead = b.leading();
    b = b.monic();
    AffineFunction t(curve, Poly::zero(F), b);
    EtaleCertificate cert = verify_etale_cover(t);
    if (!cert.accepted) throw Error(errc::invalid_argument, "constructed cover failed to verify");
    assert(cert.degree == 2 * H1.degree() - (2 * g + 1) * p);
    assert(cert.dt_constant == lead.inverse());
    assert(cert.degree % p == 0 && ((cert.degree / p) % 2) == 1);
    assert(cert.degree <= (2 * g - 1) * p);
    (void)lead;
    return {curve, t, cert.degree, cert.dt_constant, true};
}

CoverCertificate build_cover_of_degree(const Curve& curve, i64 m) {
    const Field& F = curve.field();
    const i64 p = F.p();
    const int g = curve.genus();
    CoverCertificate minimal = build_cover(curve);
    if (m == minimal.degree) return minimal;
    i64 n = m / p;
    if (m <= 0 || m % p != 0 || n <= minimal.degree / p ||
        (n % 2 == 1 && n <= 2 * g - 1))
        throw Error(errc::not_admissible,
                    "degree " + std::to_string(m) + " is not an admissible cover degree");
    // z with a pole of exact order n at P and no other pole
    AffineFunction z =
        n % 2 == 0
            ? AffineFunction(curve, Poly::monomial(F, static_cast<int>(n / 2), F.one()),
                             Poly::zero(F))
            : AffineFunction(curve, Poly::zero(F),
                             Poly::monomial(F, static_cast<int>((n - 2 * g - 1) / 2), F.one()));
    AffineFunction t = minimal.t + z.pow(p);
    EtaleCertificate cert = verify_etale_cover(t);
    if (!cert.accepted || cert.degree != m)
        throw Error(errc::invalid_argument, "degree-adjusted cover failed to verify");
    return {curve, t, m, cert.dt_constant, false};
}

Elem weierstrass_root_sum(const Curve& curve, const Poly& H) {
    // sum over the roots u of f of H(u) / f'(u)^p, gathered along conjugacy
    // classes: the contribution of an irreducible factor f_i is the trace of
    // H(x) f'(x)^{-p} from F_q[x]/(f_i) down to F_q.
    const Field& F = curve.field();
    const i64 p = F.p();
    Elem total = F.zero();
    for (const Poly& fi : factor_squarefree(curve.f())) {
        Poly df = curve.f().derivative() % fi;
        // invert f' mod f_i via the unit group of the residue field
        i64 qi = 1;  // q^deg(fi) - 1 may overflow for huge fields; guarded upstream
        for (int i = 0; i < fi.degree(); ++i) {
            if (qi > (i64{1} << 62) / F.q())
                throw Error(errc::invalid_argument, "residue field too large for root sum");
            qi *= F.q();
        }
        Poly inv_df = powmod(df, qi - 2, fi);
        Poly val = (H % fi) * powmod(inv_df, p, fi) % fi;
        // trace: val + val^q + ... + val^(q^(d-1))
        Poly acc = Poly::zero(F);
        Poly cur = val;
        for (int i = 0; i < fi.degree(); ++i) {
            acc += cur;
            if (i + 1 < fi.degree()) {
                for (int j = 0; j < F.m(); ++j) cur = powmod(cur, p, fi);
            }
        }
        acc = acc % fi;
        assert(acc.degree() <= 0);
        total += acc.coeff(0);
    }
    return total;
}

bool degeneration_sum_check(const Curve& curve) {
    const i64 p = curve.field().p();
    const int g = curve.genus();
    Poly H = build_H(curve);
    Poly H1 = build_H1(curve, H);
    bool below = H1.degree() < 2 * g * static_cast<int>(p);
    // the root sum is minus the top coefficient of H1
    Elem sum = weierstrass_root_sum(curve, H);
    if (sum != -H1.coeff(2 * g * static_cast<int>(p)))
        throw Error(errc::invalid_argument, "root sum disagrees with the top coefficient of H1");
    return below;
}

}  // namespace etale
