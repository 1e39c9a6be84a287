#include "etale/moduli.hpp"

#include <algorithm>
#include <cassert>
#include <thread>
#include <unordered_set>

#include "etale/factor.hpp"

namespace etale {

Poly NormalForm::to_poly() const {
    std::vector<Elem> c = tail;
    c.push_back(F->one());
    return Poly(*F, std::move(c));
}

NormalForm NormalForm::from_poly(const Poly& f, bool trace_normalized) {
    const int g = (f.degree() - 1) / 2;
    std::vector<Elem> tail;
    for (int i = 0; i <= 2 * g; ++i) tail.push_back(f.coeff(i));
    return {&f.field(), g, std::move(tail), trace_normalized};
}

std::vector<i64> NormalForm::key() const {
    std::vector<i64> k;
    k.reserve(tail.size());
    for (const auto& e : tail) k.push_back(e.index());
    return k;
}

std::optional<Elem> is_isomorphic(const NormalForm& nf1, const NormalForm& nf2) {
    if (!nf1.trace_normalized || !nf2.trace_normalized)
        throw Error(errc::not_normalized, "isomorphism scan requires trace-normalized forms");
    if (nf1.F != nf2.F || nf1.genus != nf2.genus)
        throw Error(errc::invalid_argument, "forms live on different spaces");
    const Field& F = *nf1.F;
    const int w = 2 * nf1.genus + 1;
    if (w % F.p() == 0)
        throw Error(errc::not_normalized, "trace normalization needs p not dividing 2g+1");
    for (i64 idx = 1; idx < F.q(); ++idx) {
        Elem lambda = F.element_from_index(idx);
        bool ok = true;
        for (int i = 0; i <= 2 * nf1.genus && ok; ++i)
            ok = nf2.tail[static_cast<size_t>(i)] ==
                 lambda.pow(w - i) * nf1.tail[static_cast<size_t>(i)];
        if (ok) return lambda;
    }
    return std::nullopt;
}

Poly transform_model(const Poly& f, const Elem& a, const Elem& b) {
    if (a.is_zero()) throw Error(errc::invalid_argument, "substitution scale must be nonzero");
    return f.compose_linear(a, b) * a.pow(-(f.degree()));
}

Curve move_root_to_infinity(const Curve& curve, const Elem& root) {
    const Field& F = curve.field();
    const int g = curve.genus();
    Poly shifted = curve.f().compose_linear(F.one(), root);  // f(x + root)
    if (!shifted.coeff(0).is_zero())
        throw Error(errc::invalid_argument, "not a root of f");
    // f(root + z) = z * g1(z) with g1(0) = f'(root) != 0;
    // the new model is x * (x^2g * g1(1/x)), made monic by rescaling.
    std::vector<Elem> g1coef(shifted.coeffs().begin() + 1, shifted.coeffs().end());
    Poly g1(F, std::move(g1coef));
    Poly f1 = g1.reverse(2 * g).shift(1);
    Elem v = f1.leading();
    Poly f2 = f1.compose_linear(v, F.zero()) * v.pow(-(2 * g + 2));
    return Curve::create(F, f2);
}

namespace {

i64 encode_tuple(const std::vector<Elem>& tail, int slots, i64 q) {
    i64 code = 0;
    for (int i = slots - 1; i >= 0; --i) code = code * q + tail[static_cast<size_t>(i)].index();
    return code;
}

std::vector<Elem> decode_tuple(const Field& F, i64 code, int slots) {
    std::vector<Elem> tail;
    tail.reserve(static_cast<size_t>(slots));
    for (int i = 0; i < slots; ++i) {
        tail.push_back(F.element_from_index(code % F.q()));
        code /= F.q();
    }
    return tail;
}

// Coefficients [f^((p-1)/2)]_(ip-1), i = 1..g, cheap paths for small
// exponents since the search loops run over millions of candidates.
bool passes_cover_criterion(const Poly& f, int g, i64 p) {
    const int e = static_cast<int>((p - 1) / 2);
    if (e == 1) {
        for (int i = g; i >= 1; --i)
            if (!f.coeff(static_cast<int>(i * p) - 1).is_zero()) return false;
        return true;
    }
    if (e == 2) {
        const Field& F = f.field();
        for (int i = g; i >= 1; --i) {
            int k = static_cast<int>(i * p) - 1;
            Elem sum = F.zero();
            for (int a = std::max(0, k - f.degree()); 2 * a <= k; ++a) {
                if (a > f.degree()) break;
                Elem prod = f.coeff(a) * f.coeff(k - a);
                sum += 2 * a == k ? prod : prod + prod;
            }
            if (!sum.is_zero()) return false;
        }
        return true;
    }
    Poly h = f.pow(e);
    for (int i = 1; i <= g; ++i)
        if (!h.coeff(static_cast<int>(i * p) - 1).is_zero()) return false;
    return true;
}

std::vector<i64> orbit_of(const Poly& f, bool trace_normalized, int slots) {
    const Field& F = f.field();
    std::vector<i64> orbit;
    if (trace_normalized) {
        orbit.reserve(static_cast<size_t>(F.q() - 1));
        for (i64 ai = 1; ai < F.q(); ++ai) {
            Elem lambda = F.element_from_index(ai);
            NormalForm nf = NormalForm::from_poly(transform_model(f, lambda, F.zero()), true);
            orbit.push_back(encode_tuple(nf.tail, slots, F.q()));
        }
    } else {
        orbit.reserve(static_cast<size_t>((F.q() - 1) * F.q()));
        for (i64 ai = 1; ai < F.q(); ++ai) {
            Elem a = F.element_from_index(ai);
            for (i64 bi = 0; bi < F.q(); ++bi) {
                Elem b = F.element_from_index(bi);
                NormalForm nf = NormalForm::from_poly(transform_model(f, a, b), false);
                orbit.push_back(encode_tuple(nf.tail, slots, F.q()));
            }
        }
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

SuperspecialExperiment run_superspecial_experiment(const Curve& curve, i64 degree_at_infinity) {
    const Field& F = curve.field();
    SuperspecialExperiment exp;
    exp.degree_at_infinity = degree_at_infinity;
    exp.some_point_degree_p = degree_at_infinity == F.p();
    for (const Poly& fi : factor_squarefree(curve.f())) {
        const int d = fi.degree();
        const Field& big = Field::get(F.p(), F.m() * d);
        Embedding emb(F, big);
        Poly fi_big = emb(fi);
        auto rs = roots(fi_big);
        assert(!rs.empty());
        Curve moved = move_root_to_infinity(
            Curve::create(big, emb(curve.f())), rs.front());
        i64 deg = build_cover(moved).degree;
        assert(deg == minimal_degree_linalg(moved));
        exp.finite_points.push_back({fi.str(), d, deg});
        if (deg == F.p()) exp.some_point_degree_p = true;
    }
    return exp;
}

}  // namespace

SearchReport search_Eg(i64 p, int g, i64 q, int jobs) {
    const Field* Fq = nullptr;
    {
        i64 t = q;
        int e = 0;
        while (t > 1 && t % p == 0) {
            t /= p;
            ++e;
        }
        if (t != 1 || e < 1)
            throw Error(errc::invalid_argument, "q must be a positive power of p");
        Fq = &Field::get(p, e);
    }
    const Field& F = *Fq;
    const int w = 2 * g + 1;
    const bool trace_normalized = w % p != 0;
    const int slots = 2 * g + 1;                       // a_0 .. a_2g
    const int free_slots = trace_normalized ? 2 * g : 2 * g + 1;
    i64 total = 1;
    for (int i = 0; i < free_slots; ++i) {
        if (total > (i64{1} << 56) / q)
            throw Error(errc::invalid_argument, "search space too large");
        total *= q;
    }

    SearchReport report{p, g, q, trace_normalized, total, 0, {}};

    // Phase 1 (parallel): enumerate candidate tuples, keep the squarefree
    // models passing the coefficient criterion. Shards are contiguous index
    // ranges, so concatenation preserves the global ascending order.
    jobs = std::max(1, jobs);
    std::vector<std::vector<i64>> shard_hits(static_cast<size_t>(jobs));
    auto worker = [&](int shard) {
        i64 lo = total * shard / jobs, hi = total * (shard + 1) / jobs;
        auto& hits = shard_hits[static_cast<size_t>(shard)];
        for (i64 code = lo; code < hi; ++code) {
            std::vector<Elem> tail = decode_tuple(F, code, free_slots);
            tail.resize(static_cast<size_t>(slots), F.zero());
            Poly f(F, [&] {
                std::vector<Elem> c = tail;
                c.push_back(F.one());
                return c;
            }());
            if (!passes_cover_criterion(f, g, p)) continue;
            if (!is_squarefree(f)) continue;
            hits.push_back(code);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int s = 0; s < jobs; ++s) pool.emplace_back(worker, s);
        for (auto& th : pool) th.join();
    }

    // Phase 2 (sequential): orbit-based deduplication in ascending order.
    std::unordered_set<i64> seen;
    for (const auto& hits : shard_hits) {
        report.covers_found += static_cast<i64>(hits.size());
        for (i64 code : hits) {
            if (seen.count(code)) continue;
            std::vector<Elem> tail = decode_tuple(F, code, free_slots);
            tail.resize(static_cast<size_t>(slots), F.zero());
            NormalForm rep{&F, g, tail, trace_normalized};
            Poly f = rep.to_poly();
            std::vector<i64> orbit = orbit_of(f, trace_normalized, slots);
            for (i64 member : orbit) seen.insert(member);

            Curve curve = Curve::create(F, f);
            SearchEntry entry{rep,
                              static_cast<i64>(orbit.size()),
                              classify(curve),
                              minimal_degree_linalg(curve),
                              0,
                              admissible_degrees(curve, 3 * (2 * g - 1) * p),
                              build_cover(curve),
                              std::nullopt};
            entry.min_degree_explicit = entry.witness.degree;
            if (entry.cls.kind == CurveClass::superspecial)
                entry.superspecial = run_superspecial_experiment(curve, entry.witness.degree);
            report.classes.push_back(std::move(entry));
        }
    }
    std::sort(report.classes.begin(), report.classes.end(),
              [](const SearchEntry& a, const SearchEntry& b) { return a.rep.key() < b.rep.key(); });
    return report;
}

namespace {

struct FamilyChecker {
    FamilyReport report;
    bool note_failure(bool ok, bool& flag, const std::string& what) {
        if (!ok) {
            flag = false;
            if (report.first_failure.empty()) report.first_failure = what;
        }
        return ok;
    }
};

}  // namespace

FamilyReport family_check(const std::string& family_id, int ext_degree) {
    if (family_id != "p5_a" && family_id != "p7_ab")
        throw Error(errc::unknown_family, "unknown family '" + family_id + "'");
    const bool p5 = family_id == "p5_a";
    const i64 p = p5 ? 5 : 7;
    const Field& F = Field::get(p, ext_degree);

    FamilyChecker ck;
    ck.report.family_id = family_id;
    ck.report.p = p;
    ck.report.ext_degree = ext_degree;
    ck.report.q = F.q();
    // every checked identity is a polynomial relation of total degree at
    // most deg h + deg f = (2g+1)(p-1)/2 + (2g+1) in the parameters
    ck.report.degree_bound = 5 * (p - 1) / 2 + 5;
    ck.report.identities_proved = F.q() > ck.report.degree_bound;
    ck.report.points_total = 0;
    ck.report.points_smooth = 0;
    ck.report.membership_ok = ck.report.matrix_ok = ck.report.degrees_ok = true;
    ck.report.classification_ok = ck.report.smoothness_ok = true;

    const i64 npoints = p5 ? F.q() : F.q() * F.q();
    ck.report.points_total = npoints;

    for (i64 pi = 0; pi < npoints; ++pi) {
        Elem a = F.element_from_index(p5 ? pi : pi % F.q());
        Elem b = p5 ? F.zero() : F.element_from_index(pi / F.q());
        Poly f = Poly::zero(F);
        Elem disc = F.zero();
        if (p5) {
            // y^2 = x + a x^2 + 2 a^2 x^3 + x^5, smooth iff a^4 + 3 != 0
            f = Poly(F, {F.zero(), F.one(), a, F.from_int(2) * a * a, F.zero(), F.one()});
            disc = a.pow(4) + F.from_int(3);
        } else {
            // y^2 = a^3 + b^3 x + a b x^2 + x^5, smooth iff a^4 + 3 b^5 != 0
            f = Poly(F, {a.pow(3), b.pow(3), a * b, F.zero(), F.zero(), F.one()});
            disc = a.pow(4) + F.from_int(3) * b.pow(5);
        }

        // the coefficient criterion is an identity in the parameters
        ck.note_failure(passes_cover_criterion(f, 2, p), ck.report.membership_ok,
                        "cover criterion fails at " + a.str() + "," + b.str());

        bool smooth = is_squarefree(f);
        ck.note_failure(smooth == !disc.is_zero(), ck.report.smoothness_ok,
                        "smoothness criterion mismatch at " + a.str() + "," + b.str());
        if (!smooth) continue;
        ++ck.report.points_smooth;

        Curve curve = Curve::create(F, f);

        // Cartier matrix on Omega(-3P) against the displayed columns
        Mat M = cartier_matrix(curve, -3).a;
        Mat expect(F, 2, 4);
        if (p5) {
            expect.at(0, 1) = F.from_int(2) * a;
            expect.at(1, 1) = -(a * a);
            expect.at(0, 2) = F.one();
            expect.at(1, 2) = F.from_int(2) * a;
        } else {
            Elem s = b.pow(5) + a.pow(4);
            expect.at(0, 1) = F.from_int(3) * a * a * s;
            expect.at(1, 1) = F.from_int(3) * a * b;
            expect.at(0, 2) = F.from_int(3) * a * b * b * s;
            expect.at(1, 2) = F.from_int(3) * b.pow(3);
        }
        ck.note_failure(M == expect, ck.report.matrix_ok,
                        "Cartier matrix mismatch at " + a.str() + "," + b.str());

        // minimal degree, by both routes
        i64 lin = minimal_degree_linalg(curve);
        i64 exp_deg = build_cover(curve).degree;
        i64 want;
        if (p5) {
            want = a.is_zero() ? 5 : 15;
        } else {
            if (!a.is_zero() && !b.is_zero())
                want = 21;
            else if (!a.is_zero())
                want = 7;
            else
                want = 21;
        }
        ck.note_failure(lin == want && exp_deg == want, ck.report.degrees_ok,
                        "minimal degree mismatch at " + a.str() + "," + b.str());

        Classification cls = classify(curve);
        bool cls_ok;
        if (p5) {
            cls_ok = a.is_zero() ? cls.kind == CurveClass::superspecial
                                 : (cls.kind == CurveClass::intermediate && cls.sigma == 1);
        } else {
            bool ss = cls.kind == CurveClass::supersingular || cls.kind == CurveClass::superspecial;
            cls_ok = ss == (a.is_zero() || b.is_zero());
            if (a == F.one() && b.is_zero()) cls_ok = cls_ok && cls.kind != CurveClass::superspecial;
            if (a.is_zero() && b == F.one()) cls_ok = cls_ok && cls.kind == CurveClass::superspecial;
        }
        ck.note_failure(cls_ok, ck.report.classification_ok,
                        "classification mismatch at " + a.str() + "," + b.str());
    }
    return ck.report;
}

}  // namespace etale
