#ifndef ETALE_POLY_HPP
#define ETALE_POLY_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "etale/field.hpp"

namespace etale {

// Dense univariate polynomial over a finite field, ascending coefficients,
// no trailing zeros (the zero polynomial has an empty coefficient vector).
class Poly {
  public:
    explicit Poly(const Field& F) : F_(&F) {}
    Poly(const Field& F, std::vector<Elem> coeffs) : F_(&F), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const Field& F) { return Poly(F); }
    static Poly constant(const Elem& e);
    static Poly from_int(const Field& F, i64 n) { return constant(F.from_int(n)); }
    static Poly x(const Field& F);
    static Poly monomial(const Field& F, int degree, const Elem& coeff);
    static Poly from_ints(const Field& F, std::vector<i64> coeffs);

    const Field& field() const { return *F_; }
    // degree of the zero polynomial is -1
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }

    Elem coeff(int k) const;
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    Elem leading() const;
    Elem constant_term() const { return coeff(0); }

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Elem& s) const;
    Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
    Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
    bool operator==(const Poly& rhs) const noexcept { return c_ == rhs.c_; }
    bool operator!=(const Poly& rhs) const noexcept { return !(*this == rhs); }

    // Division with remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& divisor) const;
    Poly operator/(const Poly& divisor) const { return divrem(divisor).first; }
    Poly operator%(const Poly& divisor) const { return divrem(divisor).second; }
    // Exact division; throws if the remainder is nonzero.
    Poly exact_div(const Poly& divisor) const;

    Poly monic() const;
    Poly derivative() const;

    // Term-wise antiderivative with zero constant term. Fails with
    // no_antiderivative when a coefficient sits in degree = -1 mod p.
    Poly antiderivative() const;

    Poly pow(i64 e) const;
    Poly shift(int k) const;  // multiply by x^k
    Elem eval(const Elem& x) const;
    // f(a*x + b), used for model substitutions.
    Poly compose_linear(const Elem& a, const Elem& b) const;
    // x^degree * f(1/x) truncated at the given degree (>= deg f).
    Poly reverse(int degree) const;

    // Total-order key: (degree, coefficient indices ascending).
    std::vector<i64> key() const;

    std::string str(char var = 'x') const;

  private:
    void trim();

    const Field* F_;
    std::vector<Elem> c_;
};

Poly gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, i64 exp, const Poly& mod);

std::ostream& operator<<(std::ostream& os, const Poly& f);

// Recursive-descent parser for the polynomial grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := int | var | '(' expr ')'
// Whitespace is insignificant; integer literals may be negative. Over an
// extension field the generator letter 't' is also accepted as an atom, so
// canonical output round-trips. Errors carry the byte offset.
Poly poly_parse(const std::string& text, const Field& F, char var = 'x');

// Parse a field element: a polynomial expression in 't', evaluated at the
// generator (constants only over a prime field).
Elem parse_element(const std::string& text, const Field& F);

std::string poly_str(const Poly& f, char var = 'x');

}  // namespace etale

#endif
