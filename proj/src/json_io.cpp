#include "etale/json_io.hpp"

#include <sstream>

namespace etale {

json curve_json(const Curve& curve) {
    return json{{"p", curve.field().p()},
                {"m", curve.field().m()},
                {"f", curve.f().str()},
                {"genus", curve.genus()}};
}

json function_json(const AffineFunction& t) {
    return json{{"a", t.a().str()}, {"b", t.b().str()}};
}

json cover_json(const CoverCertificate& cert) {
    return json{{"curve", curve_json(cert.curve)},
                {"t", function_json(cert.t)},
                {"degree", cert.degree},
                {"c", cert.dt_constant.str()},
                {"minimal", cert.minimal}};
}

json matrix_json(const SemilinearMap& M) {
    json entries = json::array();
    for (int i = 0; i < M.a.rows(); ++i)
        for (int j = 0; j < M.a.cols(); ++j) entries.push_back(M.a.at(i, j).str());
    return json{{"m_dom", M.m_dom},
                {"m_cod", M.m_cod},
                {"rows", M.a.rows()},
                {"cols", M.a.cols()},
                {"entries", entries},
                {"domain_basis", M.domain_labels},
                {"codomain_basis", M.codomain_labels}};
}

json classification_json(const Classification& cls) {
    return json{{"class", curve_class_name(cls)}, {"p_rank", cls.sigma}};
}

namespace {

json normal_form_json(const NormalForm& nf) {
    json tail = json::array();
    for (const auto& e : nf.tail) tail.push_back(e.str());
    return json{{"f", nf.to_poly().str()},
                {"coefficients", tail},
                {"trace_normalized", nf.trace_normalized}};
}

json superspecial_json(const SuperspecialExperiment& exp) {
    json pts = json::array();
    for (const auto& wp : exp.finite_points)
        pts.push_back(json{{"factor", wp.factor},
                           {"residue_degree", wp.residue_degree},
                           {"min_degree", wp.min_degree}});
    return json{{"degree_at_infinity", exp.degree_at_infinity},
                {"finite_points", pts},
                {"some_point_degree_p", exp.some_point_degree_p}};
}

json search_entry_json(const SearchEntry& e) {
    json witnesses = json{{"cover", cover_json(e.witness)}};
    if (e.superspecial) witnesses["superspecial_experiment"] = superspecial_json(*e.superspecial);
    return json{{"normal_form", normal_form_json(e.rep)},
                {"class_size", e.class_size},
                {"classification", curve_class_name(e.cls)},
                {"p_rank", e.cls.sigma},
                {"min_degree",
                 json{{"linalg", e.min_degree_linalg},
                      {"explicit", e.min_degree_explicit},
                      {"agree", e.min_degree_linalg == e.min_degree_explicit}}},
                {"admissible_degrees", e.admissible},
                {"witnesses", witnesses}};
}

}  // namespace

json search_json(const SearchReport& report) {
    json classes = json::array();
    for (const auto& e : report.classes) classes.push_back(search_entry_json(e));
    return json{{"p", report.p},
                {"g", report.g},
                {"q", report.q},
                {"trace_normalized", report.trace_normalized},
                {"tuples_scanned", report.tuples_scanned},
                {"covers_found", report.covers_found},
                {"classes", classes}};
}

json family_json(const FamilyReport& r) {
    return json{{"family", r.family_id},
                {"p", r.p},
                {"ext_degree", r.ext_degree},
                {"q", r.q},
                {"degree_bound", r.degree_bound},
                {"identities_proved", r.identities_proved},
                {"points_total", r.points_total},
                {"points_smooth", r.points_smooth},
                {"membership_ok", r.membership_ok},
                {"matrix_ok", r.matrix_ok},
                {"degrees_ok", r.degrees_ok},
                {"classification_ok", r.classification_ok},
                {"smoothness_ok", r.smoothness_ok},
                {"all_ok", r.all_ok()},
                {"first_failure", r.first_failure}};
}

json table_json() {
    json rows = json::array();
    for (const auto& row : table_rows()) {
        TableCertificate cert = verify_table(row.p, row.f_text, row.b_text);
        bool verified = cert.listed.degree == row.p && cert.proportional;
        std::string b_str = cert.listed.t.b().str();
        std::string cover = b_str == "1" ? "y" : "(" + b_str + ")*y";
        rows.push_back(json{{"p", row.p},
                            {"equation", "y^2 = " + cert.curve.f().str()},
                            {"j", cert.j.str()},
                            {"cover", cover},
                            {"degree", cert.listed.degree},
                            {"constructed_b", cert.constructed.t.b().str()},
                            {"verified", verified}});
    }
    return json{{"rows", rows}};
}

json legendre_json(const Elem& lambda) {
    LegendreCoeffs c = legendre_coeffs(lambda);
    return json{{"lambda", lambda.str()},
                {"c_m", c.c_m.str()},
                {"c_m_minus_1", c.c_m1.str()},
                {"supersingular", c.c_m.is_zero()},
                {"ramification", ramification_shape_name(canonical_cover_classify(lambda))},
                {"j", j_from_lambda(lambda).str()}};
}

std::string search_tsv(const SearchReport& report) {
    std::ostringstream os;
    os << "normal_form\tclass_size\tclassification\tp_rank\tmin_degree\tadmissible_degrees\n";
    for (const auto& e : report.classes) {
        os << e.rep.to_poly().str() << '\t' << e.class_size << '\t' << curve_class_name(e.cls)
           << '\t' << e.cls.sigma << '\t' << e.min_degree_linalg << '\t';
        for (size_t i = 0; i < e.admissible.size(); ++i)
            os << (i ? "," : "") << e.admissible[i];
        os << '\n';
    }
    return os.str();
}

std::string table_tsv() {
    std::ostringstream os;
    os << "p\tequation\tj\tcover\tverified\n";
    json t = table_json();
    for (const auto& row : t["rows"])
        os << row["p"].get<i64>() << '\t' << row["equation"].get<std::string>() << '\t'
           << row["j"].get<std::string>() << '\t' << row["cover"].get<std::string>() << '\t'
           << (row["verified"].get<bool>() ? "yes" : "no") << '\n';
    return os.str();
}

}  // namespace etale
