#ifndef ETALE_FIELD_HPP
#define ETALE_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "etale/errors.hpp"

namespace etale {

using i64 = std::int64_t;

class Elem;

// The finite field F_{p^m}, realized as F_p[t]/(modulus) with a deterministic
// modulus: the lexicographically smallest monic irreducible of degree m over
// F_p, coefficients compared in ascending degree order. Fields are interned
// and immutable, so raw pointers to them stay valid for the whole process.
class Field {
  public:
    static const Field& get(i64 p, int m = 1);

    i64 p() const noexcept { return p_; }
    int m() const noexcept { return m_; }
    i64 q() const noexcept { return q_; }

    // Ascending coefficients of the modulus, length m + 1; empty when m = 1.
    const std::vector<i64>& modulus() const noexcept { return modulus_; }

    Elem zero() const;
    Elem one() const;
    Elem from_int(i64 n) const;
    // The class of t, only defined for m > 1.
    Elem gen() const;
    Elem element(std::vector<i64> coeffs) const;

    // Enumeration order used everywhere a "fixed total order" is needed:
    // index(e) = sum of coeff[i] * p^i.
    Elem element_from_index(i64 index) const;

    bool operator==(const Field& other) const noexcept { return this == &other; }

  private:
    Field(i64 p, int m);
    friend class Elem;

    i64 p_;
    int m_;
    i64 q_;
    std::vector<i64> modulus_;
};

class Elem {
  public:
    Elem() : F_(nullptr) {}

    const Field& field() const { return *F_; }
    const std::vector<i64>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    i64 index() const noexcept;  // canonical total-order key

    Elem operator-() const;
    Elem operator+(const Elem& rhs) const;
    Elem operator-(const Elem& rhs) const;
    Elem operator*(const Elem& rhs) const;
    Elem operator/(const Elem& rhs) const;
    Elem& operator+=(const Elem& rhs) { return *this = *this + rhs; }
    Elem& operator-=(const Elem& rhs) { return *this = *this - rhs; }
    Elem& operator*=(const Elem& rhs) { return *this = *this * rhs; }

    bool operator==(const Elem& rhs) const noexcept;
    bool operator!=(const Elem& rhs) const noexcept { return !(*this == rhs); }

    Elem inverse() const;
    Elem pow(i64 e) const;

    // Frobenius x -> x^p and its inverse (x -> x^{p^{m-1}}).
    Elem frob() const;
    Elem frob_inv() const;
    Elem frob_power(int k) const;  // x -> x^{p^k}, k >= 0

    // Canonical string: decimal for prime fields, polynomial in t otherwise,
    // e.g. "2*t + 1". Least nonnegative coefficients throughout.
    std::string str() const;

  private:
    friend class Field;
    Elem(const Field* F, std::vector<i64> c) : F_(F), c_(std::move(c)) {}

    const Field* F_;
    std::vector<i64> c_;  // length m, entries in [0, p)
};

std::ostream& operator<<(std::ostream& os, const Elem& e);

inline Elem frob_inv(const Elem& e) { return e.frob_inv(); }

}  // namespace etale

#endif
