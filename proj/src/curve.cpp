#include "etale/curve.hpp"

#include <algorithm>

#include "etale/factor.hpp"

namespace etale {

Curve::Curve(const Field& F, Poly f, int g) : F_(&F), f_(std::move(f)), g_(g) {
    for (int n = 1; n <= 2 * g_ - 1; n += 2) gaps_.insert(n);
}

Curve Curve::create(const Field& F, const Poly& f) {
    if (F.p() == 2) throw Error(errc::char_two, "odd characteristic required");
    if (f.degree() < 3 || f.degree() % 2 == 0)
        throw Error(f.degree() >= 0 && f.degree() % 2 == 0 ? errc::even_degree
                                                           : errc::invalid_argument,
                    "f must have odd degree >= 3");
    if (!f.is_monic()) throw Error(errc::not_monic, "f must be monic");
    if (!is_squarefree(f)) throw Error(errc::not_squarefree, "f must have distinct roots");
    return Curve(F, f, (f.degree() - 1) / 2);
}

AffineFunction::AffineFunction(Curve curve, Poly a, Poly b)
    : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b)) {}

AffineFunction AffineFunction::operator+(const AffineFunction& rhs) const {
    return AffineFunction(curve_, a_ + rhs.a_, b_ + rhs.b_);
}

AffineFunction AffineFunction::operator-(const AffineFunction& rhs) const {
    return AffineFunction(curve_, a_ - rhs.a_, b_ - rhs.b_);
}

AffineFunction AffineFunction::operator*(const AffineFunction& rhs) const {
    // (a1 + b1 y)(a2 + b2 y) = a1 a2 + b1 b2 f + (a1 b2 + a2 b1) y
    return AffineFunction(curve_, a_ * rhs.a_ + b_ * rhs.b_ * curve_.f(),
                          a_ * rhs.b_ + rhs.a_ * b_);
}

AffineFunction AffineFunction::operator*(const Elem& s) const {
    return AffineFunction(curve_, a_ * s, b_ * s);
}

AffineFunction AffineFunction::pow(i64 e) const {
    AffineFunction r(curve_, Poly::constant(curve_.field().one()), Poly::zero(curve_.field()));
    AffineFunction base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

i64 pole_order_at_infinity(const AffineFunction& t) {
    if (t.is_zero()) throw Error(errc::zero_function, "zero function has no pole order");
    const i64 g = t.curve().genus();
    i64 na = t.a().is_zero() ? -1 : 2 * t.a().degree();
    i64 nb = t.b().is_zero() ? -1 : 2 * t.b().degree() + 2 * g + 1;
    return std::max(na, nb);
}

Differential differential(const AffineFunction& t) {
    const Field& F = t.curve().field();
    const Poly& f = t.curve().f();
    Elem inv2 = F.from_int(2).inverse();
    Poly A = t.b().derivative() * f + t.b() * f.derivative() * inv2;
    Poly B = t.a().derivative();
    return {A, B};
}

EtaleCertificate verify_etale_cover(const AffineFunction& t) {
    EtaleCertificate cert;
    cert.dt_constant = t.curve().field().zero();
    if (t.is_zero()) {
        cert.rejection = "t is the zero function";
        return cert;
    }
    Differential dt = differential(t);
    if (!dt.B.is_zero()) {
        cert.rejection = "dt has a y dx/y component (a' != 0)";
        return cert;
    }
    if (dt.A.is_zero()) {
        cert.rejection = "dt = 0 (t is a p-th power plus a constant)";
        return cert;
    }
    if (dt.A.degree() > 0) {
        cert.rejection = "dt = A dx/y with deg A > 0, so dt vanishes away from P";
        return cert;
    }
    cert.accepted = true;
    cert.degree = pole_order_at_infinity(t);
    cert.dt_constant = dt.A.coeff(0);
    return cert;
}

RRDimensions rr_dimensions(const Curve& curve, i64 n) {
    RRDimensions r;
    r.gaps = curve.gaps();
    const i64 g = curve.genus();
    if (n < 0) {
        r.l = 0;
    } else {
        i64 gaps_above = 0;
        for (int gap : r.gaps)
            if (gap > n) ++gaps_above;
        r.l = n + 1 - g + gaps_above;
    }
    r.i = r.l - n + g - 1;
    return r;
}

i64 delta_dim(const Curve& curve, i64 n) {
    return rr_dimensions(curve, n).l - rr_dimensions(curve, floordiv(n, curve.field().p())).l;
}

MeroForm::MeroForm(Curve curve, i64 m, Poly u, Poly w)
    : curve_(std::move(curve)), m_(m), u_(std::move(u)), w_(std::move(w)) {
    if (u_.degree() >= u_count(curve_, m_) || w_.degree() >= w_count(curve_, m_))
        throw Error(errc::pole_bound_violated,
                    "form does not lie in Omega(" + std::to_string(m_) + "P)");
}

int MeroForm::u_count(const Curve& curve, i64 m) {
    return static_cast<int>(std::max<i64>(0, floordiv(2 * curve.genus() - m, 2)));
}

int MeroForm::w_count(const Curve&, i64 m) {
    return static_cast<int>(std::max<i64>(0, floordiv(-(m + 3), 2) + 1));
}

int MeroForm::dim(const Curve& curve, i64 m) { return u_count(curve, m) + w_count(curve, m); }

MeroForm MeroForm::zero(const Curve& curve, i64 m) {
    const Field& F = curve.field();
    return MeroForm(curve, m, Poly::zero(F), Poly::zero(F));
}

MeroForm MeroForm::basis_form(const Curve& curve, i64 m, int index) {
    const Field& F = curve.field();
    const int uc = u_count(curve, m);
    if (index < 0 || index >= dim(curve, m))
        throw Error(errc::invalid_argument, "basis index out of range");
    if (index < uc)
        return MeroForm(curve, m, Poly::monomial(F, index, F.one()), Poly::zero(F));
    return MeroForm(curve, m, Poly::zero(F), Poly::monomial(F, index - uc, F.one()));
}

MeroForm MeroForm::from_coordinates(const Curve& curve, i64 m, const std::vector<Elem>& v) {
    const Field& F = curve.field();
    const int uc = u_count(curve, m);
    const int wc = w_count(curve, m);
    if (static_cast<int>(v.size()) != uc + wc)
        throw Error(errc::invalid_argument, "coordinate length mismatch");
    std::vector<Elem> ucoef(v.begin(), v.begin() + uc);
    std::vector<Elem> wcoef(v.begin() + uc, v.end());
    return MeroForm(curve, m, Poly(F, std::move(ucoef)), Poly(F, std::move(wcoef)));
}

std::vector<Elem> MeroForm::coordinates() const {
    std::vector<Elem> v;
    const int uc = u_count(curve_, m_);
    const int wc = w_count(curve_, m_);
    v.reserve(static_cast<size_t>(uc + wc));
    for (int i = 0; i < uc; ++i) v.push_back(u_.coeff(i));
    for (int j = 0; j < wc; ++j) v.push_back(w_.coeff(j));
    return v;
}

MeroForm MeroForm::operator+(const MeroForm& rhs) const {
    // Omega(m1 P) + Omega(m2 P) lands in Omega(min(m1, m2) P)
    return MeroForm(curve_, std::min(m_, rhs.m_), u_ + rhs.u_, w_ + rhs.w_);
}

MeroForm MeroForm::operator*(const Elem& s) const {
    return MeroForm(curve_, m_, u_ * s, w_ * s);
}

}  // namespace etale
