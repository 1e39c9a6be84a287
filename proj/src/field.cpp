#include "etale/field.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>

namespace etale {

namespace {

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

i64 mod_pow(i64 base, i64 exp, i64 p) {
    i64 r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

// Arithmetic on raw coefficient vectors over F_p (ascending degree, no
// normalization invariants). Used for modulus search and element reduction.
using Raw = std::vector<i64>;

int raw_deg(const Raw& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

Raw raw_mul(const Raw& a, const Raw& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    Raw r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

// Reduce a modulo the monic polynomial mod (ascending, degree = size - 1).
Raw raw_mod(Raw a, const Raw& mod, i64 p) {
    const int dm = static_cast<int>(mod.size()) - 1;
    for (int k = raw_deg(a); k >= dm; --k) {
        i64 c = a[static_cast<size_t>(k)];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            size_t idx = static_cast<size_t>(k - dm + j);
            a[idx] = ((a[idx] - c * mod[static_cast<size_t>(j)]) % p + p) % p;
        }
    }
    a.resize(static_cast<size_t>(dm));
    return a;
}

Raw raw_powmod(Raw base, i64 exp, const Raw& mod, i64 p) {
    Raw r{1};
    base = raw_mod(std::move(base), mod, p);
    while (exp > 0) {
        if (exp & 1) r = raw_mod(raw_mul(r, base, p), mod, p);
        base = raw_mod(raw_mul(base, base, p), mod, p);
        exp >>= 1;
    }
    r.resize(mod.size() - 1, 0);
    return r;
}

Raw raw_gcd(Raw a, Raw b, i64 p) {
    while (raw_deg(b) >= 0) {
        // a mod b with b made monic on the fly
        int db = raw_deg(b);
        i64 lead = b[static_cast<size_t>(db)];
        i64 inv = mod_pow(lead, p - 2, p);
        Raw bm(b.begin(), b.begin() + db + 1);
        for (auto& c : bm) c = c * inv % p;
        Raw r = raw_mod(std::move(a), bm, p);
        r.resize(static_cast<size_t>(db), 0);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin irreducibility test for a monic polynomial of degree m over F_p.
bool raw_irreducible(const Raw& f, i64 p) {
    const int m = static_cast<int>(f.size()) - 1;
    Raw x{0, 1};
    // x^(p^m) == x mod f
    Raw s = x;
    for (int i = 0; i < m; ++i) s = raw_powmod(std::move(s), p, f, p);
    Raw diff = s;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    if (raw_deg(diff) >= 0) return false;
    // gcd(x^(p^(m/l)) - x, f) == 1 for every prime l | m
    for (int l = 2; l <= m; ++l) {
        if (m % l != 0) continue;
        bool lp = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) lp = false;
        if (!lp) continue;
        Raw t = x;
        for (int i = 0; i < m / l; ++i) t = raw_powmod(std::move(t), p, f, p);
        t.resize(std::max<size_t>(t.size(), 2), 0);
        t[1] = ((t[1] - 1) % p + p) % p;
        if (raw_deg(raw_gcd(t, f, p)) != 0) return false;
    }
    return true;
}

// Smallest monic irreducible of degree m, coefficient tuples (c_0, ..,
// c_{m-1}) ordered lexicographically.
Raw smallest_irreducible(i64 p, int m) {
    Raw f(static_cast<size_t>(m) + 1, 0);
    f[static_cast<size_t>(m)] = 1;
    while (true) {
        if (raw_irreducible(f, p)) return f;
        int i = m - 1;
        while (i >= 0 && f[static_cast<size_t>(i)] == p - 1) f[static_cast<size_t>(i--)] = 0;
        if (i < 0) throw Error(errc::invalid_argument, "no irreducible polynomial found");
        ++f[static_cast<size_t>(i)];
    }
}

}  // namespace

Field::Field(i64 p, int m) : p_(p), m_(m) {
    if (!is_prime(p)) throw Error(errc::invalid_argument, "characteristic must be prime");
    if (m < 1) throw Error(errc::invalid_argument, "extension degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < m; ++i) {
        if (q_ > (i64{1} << 62) / p) throw Error(errc::invalid_argument, "field too large");
        q_ *= p;
    }
    if (m > 1) modulus_ = smallest_irreducible(p, m);
}

const Field& Field::get(i64 p, int m) {
    static std::mutex mu;
    static std::map<std::pair<i64, int>, std::unique_ptr<Field>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{p, m}];
    if (!slot) slot.reset(new Field(p, m));
    return *slot;
}

Elem Field::zero() const { return Elem(this, std::vector<i64>(static_cast<size_t>(m_), 0)); }

Elem Field::one() const { return from_int(1); }

Elem Field::from_int(i64 n) const {
    std::vector<i64> c(static_cast<size_t>(m_), 0);
    c[0] = (n % p_ + p_) % p_;
    return Elem(this, std::move(c));
}

Elem Field::gen() const {
    if (m_ < 2) throw Error(errc::invalid_argument, "prime field has no generator element t");
    std::vector<i64> c(static_cast<size_t>(m_), 0);
    c[1] = 1;
    return Elem(this, std::move(c));
}

Elem Field::element(std::vector<i64> coeffs) const {
    if (static_cast<int>(coeffs.size()) > m_)
        throw Error(errc::invalid_argument, "coefficient vector longer than extension degree");
    coeffs.resize(static_cast<size_t>(m_), 0);
    for (auto& c : coeffs) c = (c % p_ + p_) % p_;
    return Elem(this, std::move(coeffs));
}

Elem Field::element_from_index(i64 index) const {
    if (index < 0 || index >= q_) throw Error(errc::invalid_argument, "element index out of range");
    std::vector<i64> c(static_cast<size_t>(m_), 0);
    for (int i = 0; i < m_; ++i) {
        c[static_cast<size_t>(i)] = index % p_;
        index /= p_;
    }
    return Elem(this, std::move(c));
}

bool Elem::is_zero() const noexcept {
    for (i64 c : c_)
        if (c != 0) return false;
    return true;
}

bool Elem::is_one() const noexcept {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

i64 Elem::index() const noexcept {
    i64 v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * F_->p_ + c_[i];
    return v;
}

Elem Elem::operator-() const {
    std::vector<i64> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (F_->p_ - c_[i]) % F_->p_;
    return Elem(F_, std::move(r));
}

Elem Elem::operator+(const Elem& rhs) const {
    assert(F_ == rhs.F_);
    std::vector<i64> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + rhs.c_[i]) % F_->p_;
    return Elem(F_, std::move(r));
}

Elem Elem::operator-(const Elem& rhs) const {
    assert(F_ == rhs.F_);
    std::vector<i64> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] - rhs.c_[i] + F_->p_) % F_->p_;
    return Elem(F_, std::move(r));
}

Elem Elem::operator*(const Elem& rhs) const {
    assert(F_ == rhs.F_);
    const i64 p = F_->p_;
    if (F_->m_ == 1) {
        std::vector<i64> r{c_[0] * rhs.c_[0] % p};
        return Elem(F_, std::move(r));
    }
    Raw prod = raw_mul(c_, rhs.c_, p);
    prod = raw_mod(std::move(prod), F_->modulus_, p);
    prod.resize(c_.size(), 0);
    return Elem(F_, std::move(prod));
}

Elem Elem::operator/(const Elem& rhs) const { return *this * rhs.inverse(); }

bool Elem::operator==(const Elem& rhs) const noexcept { return F_ == rhs.F_ && c_ == rhs.c_; }

Elem Elem::inverse() const {
    if (is_zero()) throw Error(errc::invalid_argument, "division by zero");
    return pow(F_->q_ - 2);
}

Elem Elem::pow(i64 e) const {
    if (e < 0) {
        i64 ord = F_->q_ - 1;
        e = (e % ord + ord) % ord;
        if (is_zero()) throw Error(errc::invalid_argument, "negative power of zero");
    }
    Elem base = *this;
    Elem r = F_->one();
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Elem Elem::frob() const { return pow(F_->p_); }

Elem Elem::frob_inv() const { return frob_power(F_->m_ - 1); }

Elem Elem::frob_power(int k) const {
    Elem r = *this;
    for (int i = 0; i < k; ++i) r = r.frob();
    return r;
}

std::string Elem::str() const {
    const i64 p = F_->p_;
    if (F_->m_ == 1) return std::to_string(c_[0] % p);
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
        i64 c = c_[static_cast<size_t>(k)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Elem& e) { return os << e.str(); }

}  // namespace etale
