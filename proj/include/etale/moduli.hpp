#ifndef ETALE_MODULI_HPP
#define ETALE_MODULI_HPP

#include <optional>
#include <string>
#include <vector>

#include "etale/covers.hpp"

namespace etale {

// A pointed hyperelliptic model in normal form: f = a_0 + ... + a_2g x^2g +
// x^(2g+1), with the trace coefficient a_2g eliminated whenever p does not
// divide 2g + 1. Two trace-normalized forms give isomorphic pointed curves
// iff their tuples differ by the weighted scaling a_i -> lambda^(2g+1-i) a_i.
struct NormalForm {
    const Field* F;
    int genus;
    std::vector<Elem> tail;  // a_0 .. a_2g, ascending
    bool trace_normalized;

    Poly to_poly() const;
    static NormalForm from_poly(const Poly& f, bool trace_normalized);
    std::vector<i64> key() const;
};

// Some lambda in F_q^* realizing nf2 = lambda-scaling of nf1, or nullopt.
// Both forms must be trace-normalized over the same field with p not
// dividing 2g + 1.
std::optional<Elem> is_isomorphic(const NormalForm& nf1, const NormalForm& nf2);

// a^{-(2g+1)} f(a x + b): the substitution group acting on monic models.
Poly transform_model(const Poly& f, const Elem& a, const Elem& b);

// New monic model of the same curve with the Weierstrass point (root, 0)
// moved to infinity.
Curve move_root_to_infinity(const Curve& curve, const Elem& root);

struct WeierstrassPointDegree {
    std::string factor;  // irreducible factor of f cutting out the point
    int residue_degree;  // number of conjugate points it accounts for
    i64 min_degree;
};

struct SuperspecialExperiment {
    i64 degree_at_infinity;
    std::vector<WeierstrassPointDegree> finite_points;
    bool some_point_degree_p;
};

struct SearchEntry {
    NormalForm rep;
    i64 class_size;
    Classification cls;
    i64 min_degree_linalg;
    i64 min_degree_explicit;
    std::vector<i64> admissible;  // up to 3(2g-1)p
    CoverCertificate witness;
    std::optional<SuperspecialExperiment> superspecial;
};

struct SearchReport {
    i64 p;
    int g;
    i64 q;
    bool trace_normalized;
    i64 tuples_scanned;
    i64 covers_found;  // squarefree models passing the coefficient criterion
    std::vector<SearchEntry> classes;
};

// Enumerate every monic squarefree f of degree 2g+1 over F_q in normal form
// (trace-normalized when p does not divide 2g+1), keep the models passing
// the cover criterion, deduplicate into isomorphism classes, and analyze
// each class. Deterministic output, independent of the number of jobs.
SearchReport search_Eg(i64 p, int g, i64 q, int jobs = 1);

struct FamilyReport {
    std::string family_id;
    i64 p;
    int ext_degree;
    i64 q;
    i64 degree_bound;      // max total degree among the checked identities
    bool identities_proved;  // q > degree_bound
    i64 points_total;
    i64 points_smooth;
    bool membership_ok;
    bool matrix_ok;
    bool degrees_ok;
    bool classification_ok;
    bool smoothness_ok;
    std::string first_failure;
    bool all_ok() const {
        return membership_ok && matrix_ok && degrees_ok && classification_ok && smoothness_ok;
    }
};

// Pointwise verification of the one-parameter genus-2 family at p = 5
// (family_id "p5_a") and the two-parameter family at p = 7 ("p7_ab") over
// F_{p^ext_degree}.
FamilyReport family_check(const std::string& family_id, int ext_degree);

}  // namespace etale

#endif
