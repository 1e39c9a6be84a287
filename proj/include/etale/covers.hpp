#ifndef ETALE_COVERS_HPP
#define ETALE_COVERS_HPP

#include "etale/cartier.hpp"
#include "etale/curve.hpp"

namespace etale {

// A verified etale cover t : X \ P -> A^1 together with its degree and the
// constant c with dt = c dx/y. The minimal cover is normalized so that b is
// monic in t = b(x) y.
struct CoverCertificate {
    Curve curve;
    AffineFunction t;
    i64 degree;
    Elem dt_constant;
    bool minimal;
};

// Antiderivative H of h = f^((p-1)/2), of minimal degree deg h + 1.
// Fails with no_cover exactly when the coefficient criterion fails.
Poly build_H(const Curve& curve);

// H1 = H - s^p where s^p = H in F_q[x]/(f); equivalently H corrected by the
// unique interpolating p-th power at the roots of f. Then f^((p+1)/2)
// divides H1 and H1' = h, both of which are asserted.
Poly build_H1(const Curve& curve, const Poly& H);

// The minimal-degree cover t = y^{-p} H1(x) = (H1 / f^((p+1)/2)) y, with b
// normalized monic; degree = 2 deg H1 - (2g+1) p.
CoverCertificate build_cover(const Curve& curve);

// A cover of any admissible degree m: the minimal cover plus z^p where z
// has pole order exactly m/p (z = x^(n/2) for even n, z = x^((n-2g-1)/2) y
// for odd n > 2g-1).
CoverCertificate build_cover_of_degree(const Curve& curve, i64 m);

// True iff the minimal degree is strictly below (2g-1) p, i.e. deg H1 < 2gp.
// Cross-checked against the root sum  sum_{f(u)=0} H(u)/f'(u)^p, which is
// minus the coefficient of x^(2gp) in H1; the sum is evaluated factor by
// factor as a trace down from F_q[x]/(f_i).
bool degeneration_sum_check(const Curve& curve);

// The root sum above, evaluated independently of H1's coefficients.
Elem weierstrass_root_sum(const Curve& curve, const Poly& H);

}  // namespace etale

#endif
