#ifndef ETALE_FACTOR_HPP
#define ETALE_FACTOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "etale/poly.hpp"

namespace etale {

// gcd(f, f') is constant. The zero polynomial and constants count as
// squarefree here; curve constructors impose their own degree checks.
bool is_squarefree(const Poly& f);

// Distinct-degree factorization of a squarefree monic polynomial: pairs
// (d, number of irreducible factors of degree d), ascending in d.
std::vector<std::pair<int, int>> distinct_degrees(const Poly& f);

// Full factorization of a squarefree monic polynomial into monic
// irreducibles, deterministically ordered by (degree, coefficient key).
std::vector<Poly> factor_squarefree(const Poly& f);

// All roots of f in its coefficient field, ascending in the canonical
// element order. f need not be squarefree; each root is listed once.
std::vector<Elem> roots(const Poly& f);

// The unique s with s^p = h0 in F_q[x]/(f), for squarefree f and
// deg h0 < deg f. Computed as h0^(p^(L-1)) where L is the lcm over the
// irreducible factors f_i of m*deg(f_i), so that the p-th power Frobenius
// of the quotient ring has order dividing L.
Poly pth_root_in_quotient(const Poly& h0, const Poly& f);

// Embedding of F_{p^a} into F_{p^b} for a | b, sending the generator to the
// smallest root of the source modulus in the target field.
class Embedding {
  public:
    Embedding(const Field& src, const Field& dst);
    const Field& src() const { return *src_; }
    const Field& dst() const { return *dst_; }
    Elem operator()(const Elem& e) const;
    Poly operator()(const Poly& f) const;

  private:
    const Field* src_;
    const Field* dst_;
    Elem gen_image_;
};

}  // namespace etale

#endif
