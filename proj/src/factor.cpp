#include "etale/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace etale {

namespace {

// x^(q) mod f via m successive p-th powers.
Poly q_power_mod(const Poly& g, const Poly& f) {
    Poly r = g % f;
    for (int i = 0; i < f.field().m(); ++i) r = powmod(r, f.field().p(), f);
    return r;
}

std::uint64_t key_hash(const Poly& f) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (i64 v : f.key()) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

Poly random_poly(const Field& F, int max_deg, std::mt19937_64& rng) {
    std::vector<Elem> c;
    c.reserve(static_cast<size_t>(max_deg) + 1);
    std::uniform_int_distribution<i64> dist(0, F.q() - 1);
    for (int i = 0; i <= max_deg; ++i) c.push_back(F.element_from_index(dist(rng)));
    return Poly(F, std::move(c));
}

// Cantor-Zassenhaus split of a monic product of r >= 1 irreducibles of
// equal degree d over a field of odd order.
void equal_degree_split(const Poly& g, int d, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const Field& F = g.field();
    std::mt19937_64 rng(key_hash(g));
    while (true) {
        Poly u = random_poly(F, g.degree() - 1, rng);
        if (u.is_zero()) continue;
        Poly h = gcd(u, g);
        if (h.degree() == 0) {
            // v = u^((q^d - 1)/2) mod g, with the exponent assembled as
            // (1 + q + ... + q^(d-1)) * (q-1)/2 to keep integers small.
            Poly v = u % g;
            Poly w = v;
            for (int i = 1; i < d; ++i) {
                w = q_power_mod(w, g);
                w = (w * v) % g;
            }
            w = powmod(w, (F.q() - 1) / 2, g);
            h = gcd(w - Poly::constant(F.one()), g);
        }
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_split(h.monic(), d, out);
            equal_degree_split(g.exact_div(h).monic(), d, out);
            return;
        }
    }
}

// Distinct-degree decomposition: (d, product of the irreducible factors of
// degree d), for squarefree monic f.
std::vector<std::pair<int, Poly>> ddf(const Poly& f) {
    std::vector<std::pair<int, Poly>> parts;
    const Field& F = f.field();
    Poly rem = f;
    Poly w = Poly::x(F) % f;
    int d = 0;
    while (rem.degree() > 0) {
        ++d;
        if (2 * d > rem.degree()) {
            parts.emplace_back(rem.degree(), rem);
            break;
        }
        w = q_power_mod(w, rem);
        Poly g = gcd(w - Poly::x(F), rem);
        if (g.degree() > 0) {
            parts.emplace_back(d, g);
            rem = rem.exact_div(g).monic();
            w = w % rem;
        }
    }
    return parts;
}

}  // namespace

bool is_squarefree(const Poly& f) {
    if (f.degree() <= 0) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

std::vector<std::pair<int, int>> distinct_degrees(const Poly& f) {
    if (!is_squarefree(f)) throw Error(errc::not_squarefree, "polynomial has repeated roots");
    std::vector<std::pair<int, int>> r;
    for (const auto& [d, part] : ddf(f.monic())) r.emplace_back(d, part.degree() / d);
    return r;
}

std::vector<Poly> factor_squarefree(const Poly& f) {
    if (!is_squarefree(f)) throw Error(errc::not_squarefree, "polynomial has repeated roots");
    if (f.degree() <= 0) return {};
    std::vector<Poly> out;
    for (const auto& [d, part] : ddf(f.monic())) equal_degree_split(part, d, out);
    std::sort(out.begin(), out.end(),
              [](const Poly& a, const Poly& b) { return a.key() < b.key(); });
    return out;
}

std::vector<Elem> roots(const Poly& f) {
    const Field& F = f.field();
    std::vector<Elem> out;
    if (f.degree() <= 0) return out;
    // product of the distinct linear factors
    Poly fm = f.monic();
    Poly s = q_power_mod(Poly::x(F), fm);
    Poly lin = gcd(s - Poly::x(F), fm);
    if (lin.degree() == 0) return out;
    std::vector<Poly> factors;
    equal_degree_split(lin.monic(), 1, factors);
    out.reserve(factors.size());
    for (const auto& g : factors) out.push_back(-g.coeff(0));
    std::sort(out.begin(), out.end(),
              [](const Elem& a, const Elem& b) { return a.index() < b.index(); });
    return out;
}

Poly pth_root_in_quotient(const Poly& h0, const Poly& f) {
    if (!is_squarefree(f) || f.degree() < 1)
        throw Error(errc::not_squarefree, "quotient modulus must be squarefree");
    if (h0.degree() >= f.degree())
        throw Error(errc::invalid_argument, "residue not reduced modulo f");
    const Field& F = f.field();
    i64 L = 1;
    for (const auto& [d, count] : distinct_degrees(f.monic()))
        L = std::lcm(L, static_cast<i64>(F.m()) * d);
    Poly s = h0;
    for (i64 i = 1; i < L; ++i) s = powmod(s, F.p(), f);
    return s;
}

Embedding::Embedding(const Field& src, const Field& dst)
    : src_(&src), dst_(&dst), gen_image_(dst.zero()) {
    if (src.p() != dst.p() || dst.m() % src.m() != 0)
        throw Error(errc::invalid_argument, "no embedding between these fields");
    if (src.m() > 1) {
        Poly mod = Poly::from_ints(dst, src.modulus());
        auto rs = roots(mod);
        if (rs.empty()) throw Error(errc::invalid_argument, "modulus has no root in target");
        gen_image_ = rs.front();
    }
}

Elem Embedding::operator()(const Elem& e) const {
    Elem r = dst_->zero();
    const auto& c = e.coeffs();
    for (size_t i = c.size(); i-- > 0;) r = r * gen_image_ + dst_->from_int(c[i]);
    return r;
}

Poly Embedding::operator()(const Poly& f) const {
    std::vector<Elem> c;
    c.reserve(static_cast<size_t>(f.degree()) + 1);
    for (int k = 0; k <= f.degree(); ++k) c.push_back((*this)(f.coeff(k)));
    return Poly(*dst_, std::move(c));
}

}  // namespace etale
