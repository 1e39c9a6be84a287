#ifndef ETALE_CURVE_HPP
#define ETALE_CURVE_HPP

#include <set>
#include <string>
#include <vector>

#include "etale/poly.hpp"

namespace etale {

// floor(a / b) toward minus infinity, b > 0
constexpr i64 floordiv(i64 a, i64 b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// The hyperelliptic model y^2 = f(x) with f monic squarefree of odd degree
// 2g + 1 over a field of odd characteristic. The distinguished point P is
// the unique point at infinity of this model; v_P(x) = -2, v_P(y) = -(2g+1).
class Curve {
  public:
    static Curve create(const Field& F, const Poly& f);

    const Field& field() const { return *F_; }
    const Poly& f() const { return f_; }
    int genus() const noexcept { return g_; }
    const std::set<int>& gaps() const noexcept { return gaps_; }  // {1, 3, ..., 2g-1}

    bool operator==(const Curve& rhs) const { return F_ == rhs.F_ && f_ == rhs.f_; }

  private:
    Curve(const Field& F, Poly f, int g);

    const Field* F_;
    Poly f_;
    int g_;
    std::set<int> gaps_;
};

// a(x) + b(x) * y: exactly the rational functions regular away from P.
class AffineFunction {
  public:
    AffineFunction(Curve curve, Poly a, Poly b);

    const Curve& curve() const { return curve_; }
    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    AffineFunction operator+(const AffineFunction& rhs) const;
    AffineFunction operator-(const AffineFunction& rhs) const;
    AffineFunction operator*(const AffineFunction& rhs) const;  // uses y^2 = f
    AffineFunction operator*(const Elem& s) const;
    AffineFunction pow(i64 e) const;
    bool operator==(const AffineFunction& rhs) const { return a_ == rhs.a_ && b_ == rhs.b_; }

  private:
    Curve curve_;
    Poly a_, b_;
};

// -v_P(t) for nonzero t: max(2 deg a, 2 deg b + 2g + 1).
i64 pole_order_at_infinity(const AffineFunction& t);

// dt written as (A + B*y) dx/y; A = b'f + b f'/2, B = a'.
struct Differential {
    Poly A;
    Poly B;
};
Differential differential(const AffineFunction& t);

// Acceptance certificate for "t induces an everywhere-unramified cover of
// the affine line away from P": dt must be a nonzero constant multiple of
// dx/y, whose divisor is (2g-2) P.
struct EtaleCertificate {
    bool accepted = false;
    i64 degree = 0;
    Elem dt_constant;       // c with dt = c * dx/y, when accepted
    std::string rejection;  // failing condition otherwise
};
EtaleCertificate verify_etale_cover(const AffineFunction& t);

// l(nP), i(nP) and the gap sequence of P.
struct RRDimensions {
    i64 l = 0;
    i64 i = 0;
    std::set<int> gaps;
};
RRDimensions rr_dimensions(const Curve& curve, i64 n);

// l(nP) - l(floor(n/p) P), always >= 0.
i64 delta_dim(const Curve& curve, i64 n);

// A form u(x) dx/y + w(x) dx lying in Omega(mP): the two monomial families
// x^(n-1) dx/y (pole order 2n - 2g at P) and x^j dx (pole order 2j + 3)
// together form a basis, their pole parities being distinct.
class MeroForm {
  public:
    MeroForm(Curve curve, i64 m, Poly u, Poly w);

    static int u_count(const Curve& curve, i64 m);  // basis forms x^(n-1) dx/y
    static int w_count(const Curve& curve, i64 m);  // basis forms x^j dx
    static int dim(const Curve& curve, i64 m);      // = i(mP) for m <= 0
    static MeroForm basis_form(const Curve& curve, i64 m, int index);
    static MeroForm zero(const Curve& curve, i64 m);
    static MeroForm from_coordinates(const Curve& curve, i64 m, const std::vector<Elem>& v);

    const Curve& curve() const { return curve_; }
    i64 pole_bound() const noexcept { return m_; }
    const Poly& u() const { return u_; }
    const Poly& w() const { return w_; }
    bool is_zero() const { return u_.is_zero() && w_.is_zero(); }

    std::vector<Elem> coordinates() const;  // w.r.t. the canonical basis of Omega(mP)

    MeroForm operator+(const MeroForm& rhs) const;
    MeroForm operator*(const Elem& s) const;
    // Same underlying form, possibly different declared bound.
    bool same_form(const MeroForm& rhs) const { return u_ == rhs.u_ && w_ == rhs.w_; }

  private:
    Curve curve_;
    i64 m_;
    Poly u_, w_;
};

}  // namespace etale

#endif
