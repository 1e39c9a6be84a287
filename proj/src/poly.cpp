#include "etale/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace etale {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Elem& e) {
    Poly r(e.field());
    if (!e.is_zero()) r.c_.push_back(e);
    return r;
}

Poly Poly::x(const Field& F) { return monomial(F, 1, F.one()); }

Poly Poly::monomial(const Field& F, int degree, const Elem& coeff) {
    Poly r(F);
    if (coeff.is_zero()) return r;
    r.c_.assign(static_cast<size_t>(degree) + 1, F.zero());
    r.c_.back() = coeff;
    return r;
}

Poly Poly::from_ints(const Field& F, std::vector<i64> coeffs) {
    std::vector<Elem> c;
    c.reserve(coeffs.size());
    for (i64 v : coeffs) c.push_back(F.from_int(v));
    return Poly(F, std::move(c));
}

Elem Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return F_->zero();
    return c_[static_cast<size_t>(k)];
}

Elem Poly::leading() const {
    if (c_.empty()) return F_->zero();
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& e : r.c_) e = -e;
    return r;
}

Poly Poly::operator+(const Poly& rhs) const {
    Poly r(*F_);
    r.c_.resize(std::max(c_.size(), rhs.c_.size()), F_->zero());
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < rhs.c_.size()) r.c_[i] += rhs.c_[i];
    }
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
    Poly r(*F_);
    if (c_.empty() || rhs.c_.empty()) return r;
    r.c_.assign(c_.size() + rhs.c_.size() - 1, F_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < rhs.c_.size(); ++j) r.c_[i + j] += c_[i] * rhs.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Elem& s) const {
    Poly r = *this;
    for (auto& e : r.c_) e = e * s;
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& divisor) const {
    if (divisor.is_zero()) throw Error(errc::invalid_argument, "polynomial division by zero");
    Poly q(*F_);
    Poly r = *this;
    const int dd = divisor.degree();
    const Elem inv_lead = divisor.leading().inverse();
    if (r.degree() >= dd) q.c_.assign(static_cast<size_t>(r.degree() - dd) + 1, F_->zero());
    while (r.degree() >= dd) {
        int k = r.degree() - dd;
        Elem c = r.leading() * inv_lead;
        q.c_[static_cast<size_t>(k)] = c;
        for (int j = 0; j <= dd; ++j)
            r.c_[static_cast<size_t>(k + j)] -= c * divisor.c_[static_cast<size_t>(j)];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::exact_div(const Poly& divisor) const {
    auto [q, r] = divrem(divisor);
    if (!r.is_zero()) throw Error(errc::invalid_argument, "inexact polynomial division");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Poly Poly::derivative() const {
    Poly r(*F_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1, F_->zero());
    for (size_t k = 1; k < c_.size(); ++k)
        r.c_[k - 1] = c_[k] * F_->from_int(static_cast<i64>(k));
    r.trim();
    return r;
}

Poly Poly::antiderivative() const {
    const i64 p = F_->p();
    for (size_t k = 0; k < c_.size(); ++k) {
        if (static_cast<i64>(k + 1) % p == 0 && !c_[k].is_zero())
            throw Error(errc::no_antiderivative,
                        "coefficient in degree " + std::to_string(k) + " = -1 (mod p) is nonzero");
    }
    Poly r(*F_);
    if (c_.empty()) return r;
    r.c_.assign(c_.size() + 1, F_->zero());
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        r.c_[k + 1] = c_[k] / F_->from_int(static_cast<i64>(k + 1));
    }
    r.trim();
    return r;
}

Poly Poly::pow(i64 e) const {
    if (e < 0) throw Error(errc::invalid_argument, "negative polynomial power");
    if (degree() > 0 && degree() * e > 1000000)
        throw Error(errc::invalid_argument, "polynomial power too large");
    Poly base = *this;
    Poly r = Poly::constant(F_->one());
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Poly Poly::shift(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) throw Error(errc::invalid_argument, "negative shift");
    Poly r(*F_);
    r.c_.assign(c_.size() + static_cast<size_t>(k), F_->zero());
    std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
    return r;
}

Elem Poly::eval(const Elem& x) const {
    Elem r = F_->zero();
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Poly Poly::compose_linear(const Elem& a, const Elem& b) const {
    Poly lin(*F_, {b, a});
    Poly r(*F_);
    for (size_t i = c_.size(); i-- > 0;) r = r * lin + Poly::constant(c_[i]);
    return r;
}

Poly Poly::reverse(int degree) const {
    if (degree < this->degree()) throw Error(errc::invalid_argument, "reverse truncates");
    Poly r(*F_);
    r.c_.assign(static_cast<size_t>(degree) + 1, F_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[static_cast<size_t>(degree) - i] = c_[i];
    r.trim();
    return r;
}

std::vector<i64> Poly::key() const {
    std::vector<i64> k;
    k.reserve(c_.size() + 1);
    k.push_back(degree());
    for (const auto& e : c_) k.push_back(e.index());
    return k;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

Poly powmod(const Poly& base, i64 exp, const Poly& mod) {
    if (exp < 0) throw Error(errc::invalid_argument, "negative modular exponent");
    Poly b = base % mod;
    Poly r = Poly::constant(mod.field().one());
    while (exp > 0) {
        if (exp & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        exp >>= 1;
    }
    return r;
}

std::string Poly::str(char var) const { return poly_str(*this, var); }

std::string poly_str(const Poly& f, char var) {
    if (f.is_zero()) return "0";
    const bool ext = f.field().m() > 1;
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        Elem c = f.coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool needs_parens = ext && cs.find_first_of("+*^") != std::string::npos;
        if (k == 0) {
            if (needs_parens)
                os << "(" << cs << ")";
            else
                os << cs;
            continue;
        }
        if (!c.is_one()) {
            if (needs_parens)
                os << "(" << cs << ")*";
            else
                os << cs << "*";
        }
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.str(); }

namespace {

// Hand-rolled scanner/parser so syntax errors can report exact byte offsets.
class Parser {
  public:
    Parser(const std::string& text, const Field& F, char var)
        : s_(text), F_(F), var_(var), pos_(0) {}

    Poly run() {
        Poly r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string& what) {
        throw Error(errc::syntax_error, what + " at offset " + std::to_string(pos_), pos_);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        // optional leading sign
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            size_t save = pos_;
            ++pos_;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = save;  // negative literal, let atom handle it
            } else {
                neg = true;
            }
        }
        Poly r = term();
        if (neg) r = -r;
        while (true) {
            if (eat('+')) {
                r += term();
            } else if (peek() == '-') {
                ++pos_;
                r -= term();
            } else {
                break;
            }
        }
        return r;
    }

    Poly term() {
        Poly r = factor();
        while (eat('*')) r *= factor();
        return r;
    }

    Poly factor() {
        Poly a = atom();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected nonnegative integer exponent");
            i64 e = read_uint();
            a = a.pow(e);
        }
        return a;
    }

    i64 read_uint() {
        i64 v = 0;
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) {
                pos_ = start;
                fail("exponent too large");
            }
            ++pos_;
        }
        return v;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            bool neg = false;
            if (c == '-') {
                neg = true;
                ++pos_;
                skip_ws();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    fail("expected integer literal");
            }
            i64 v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = (v * 10 + (s_[pos_] - '0')) % F_.p();
                ++pos_;
            }
            return Poly::constant(F_.from_int(neg ? -v : v));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            if (id.size() == 1 && id[0] == var_) return Poly::x(F_);
            if (id.size() == 1 && id[0] == 't' && F_.m() > 1) return Poly::constant(F_.gen());
            throw Error(errc::wrong_variable,
                        "unknown identifier '" + id + "' at offset " + std::to_string(start),
                        start);
        }
        fail("unexpected character");
    }

    const std::string& s_;
    const Field& F_;
    char var_;
    size_t pos_;
};

}  // namespace

Poly poly_parse(const std::string& text, const Field& F, char var) {
    return Parser(text, F, var).run();
}

Elem parse_element(const std::string& text, const Field& F) {
    Poly f = poly_parse(text, F, 't');
    if (F.m() == 1) {
        if (f.degree() > 0)
            throw Error(errc::wrong_variable, "'t' has no meaning over a prime field");
        return f.coeff(0);
    }
    return f.eval(F.gen());
}

}  // namespace etale
