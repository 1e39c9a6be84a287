#ifndef ETALE_CARTIER_HPP
#define ETALE_CARTIER_HPP

#include <string>
#include <vector>

#include "etale/curve.hpp"
#include "etale/linalg.hpp"

namespace etale {

// Integer maps governing how pole divisors transform under the Cartier
// operator and under its duality involution.
i64 iota(i64 m, i64 p);   // floor(m / p)
i64 sigma(i64 n, i64 p);  // -n / -n-2 / -n-1 by the residue of n mod p

// h = f^((p-1)/2); its coefficients c_n drive everything downstream.
Poly half_power(const Curve& curve);

// The Cartier operator C on Omega(mP), m <= 0, written on the canonical
// monomial bases:
//   C(u dx/y + w dx) = sum_k F^{-1}([u h]_{kp-1}) x^{k-1} dx/y
//                    + sum_{p | j+1} F^{-1}(w_j) x^{(j+1)/p - 1} dx
// The result lies in Omega(iota(m) P).
MeroForm cartier_of_form(const Curve& curve, const MeroForm& omega);

// Matrix of C : Omega(m_dom P) -> Omega(m_cod P) in the convention
// C(e_j) = sum_i F^{-1}(a_ij) e_i; entries are stored before the inverse
// Frobenius is applied. Rank and span computations may be done directly on
// the a_ij since the entrywise Frobenius preserves both.
struct SemilinearMap {
    i64 m_dom;
    i64 m_cod;
    Mat a;
    std::vector<std::string> domain_labels;
    std::vector<std::string> codomain_labels;
};
SemilinearMap cartier_matrix(const Curve& curve, i64 m);

// Rank of the g-fold iterate of C on Omega(0): the matrix product
// A^(p^(g-1)) ... A^(p) A, whose rank equals the stable rank.
int p_rank(const Curve& curve);

enum class CurveClass { ordinary, intermediate, supersingular, superspecial };

struct Classification {
    CurveClass kind;
    int sigma;  // the p-rank
};
Classification classify(const Curve& curve);
std::string curve_class_name(const Classification& c);

// The coefficient criterion c_{p-1} = ... = c_{gp-1} = 0 for existence of
// an etale cover of the affine line based at P.
bool cover_exists(const Curve& curve);

// dim Omega(iota(m) P) - rank C_m.
int coker_dim(const Curve& curve, i64 m);

// Coordinates of Omega(nP), n >= 0, inside the canonical basis of
// Omega(m_cod P): the span of the basis forms x^(i-1) dx/y with
// 2g - 2i >= n.
Subspace regular_form_span(const Curve& curve, i64 n, i64 m_cod);

// Minimal degree of an etale cover X \ P -> A^1, via linear algebra: the
// least m = np > 0 with Omega(nP) contained in the image of C on
// Omega((1-2g) P). Requires cover_exists.
i64 minimal_degree_linalg(const Curve& curve);

// All degrees <= bound realized by some etale cover: n0 p together with np
// for n > n0 outside the gap sequence.
std::vector<i64> admissible_degrees(const Curve& curve, i64 bound);

}  // namespace etale

#endif
