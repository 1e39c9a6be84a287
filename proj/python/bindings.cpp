#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "etale/json_io.hpp"

namespace py = pybind11;
using namespace etale;

namespace {

py::object to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Curve make_curve(i64 p, const std::string& f_text, int m) {
    const Field& F = Field::get(p, m);
    return Curve::create(F, poly_parse(f_text, F));
}

}  // namespace

PYBIND11_MODULE(_etale, mod) {
    mod.doc() = "exact tools for etale covers of the affine line from hyperelliptic models";

    static py::exception<Error> exc(mod, "EtaleError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc((std::string(errc_name(e.code())) + ": " + e.what()).c_str());
        }
    });

    mod.def(
        "table", [] { return to_py(table_json()); },
        "the supersingular curves and degree-p covers for odd p <= 17");

    mod.def(
        "ss_j",
        [](i64 p) {
            std::vector<std::string> out;
            for (const Elem& j : supersingular_j_list(p)) out.push_back(j.str());
            return out;
        },
        py::arg("p"), "supersingular j-invariants in F_{p^2}, sorted");

    mod.def(
        "cartier",
        [](i64 p, const std::string& f, int m, i64 mpole) {
            Curve curve = make_curve(p, f, m);
            json d;
            d["curve"] = curve_json(curve);
            d["matrix"] = matrix_json(cartier_matrix(curve, mpole));
            d["classification"] = classification_json(classify(curve));
            d["cover_exists"] = cover_exists(curve);
            return to_py(d);
        },
        py::arg("p"), py::arg("f"), py::arg("m") = 1, py::arg("mpole") = 0,
        "Cartier matrix on Omega(mpole P), classification and p-rank");

    mod.def(
        "exists",
        [](i64 p, const std::string& f, int m) { return cover_exists(make_curve(p, f, m)); },
        py::arg("p"), py::arg("f"), py::arg("m") = 1);

    mod.def(
        "cover",
        [](i64 p, const std::string& f, int m, i64 degree) {
            Curve curve = make_curve(p, f, m);
            return to_py(cover_json(degree > 0 ? build_cover_of_degree(curve, degree)
                                               : build_cover(curve)));
        },
        py::arg("p"), py::arg("f"), py::arg("m") = 1, py::arg("degree") = 0,
        "certificate for an etale cover (minimal degree by default)");

    mod.def(
        "mindeg",
        [](i64 p, const std::string& f, int m) {
            Curve curve = make_curve(p, f, m);
            i64 lin = minimal_degree_linalg(curve);
            i64 exp = build_cover(curve).degree;
            json d{{"linalg", lin}, {"explicit", exp}, {"agree", lin == exp}};
            return to_py(d);
        },
        py::arg("p"), py::arg("f"), py::arg("m") = 1,
        "minimal cover degree by the image-containment and the explicit construction");

    mod.def(
        "admissible",
        [](i64 p, const std::string& f, i64 bound, int m) {
            return admissible_degrees(make_curve(p, f, m), bound);
        },
        py::arg("p"), py::arg("f"), py::arg("bound"), py::arg("m") = 1);

    mod.def(
        "legendre",
        [](i64 p, const std::string& lam, int m) {
            const Field& F = Field::get(p, m);
            return to_py(legendre_json(parse_element(lam, F)));
        },
        py::arg("p"), py::arg("lam"), py::arg("m") = 1,
        "Cartier coefficients and ramification shape for y^2 = x(x-1)(x-lambda)");

    mod.def(
        "search",
        [](i64 p, int g, i64 q, int jobs) { return to_py(search_json(search_Eg(p, g, q, jobs))); },
        py::arg("p"), py::arg("g"), py::arg("q"), py::arg("jobs") = 1,
        "enumerate cover-admitting curves over F_q up to isomorphism");

    mod.def(
        "family",
        [](const std::string& id, int ext) { return to_py(family_json(family_check(id, ext))); },
        py::arg("id"), py::arg("ext") = 2, "pointwise checks of the genus-2 families");

    mod.def(
        "verify",
        [](i64 p, const std::string& f, const std::string& b, int m) {
            Curve curve = make_curve(p, f, m);
            const Field& F = curve.field();
            AffineFunction t(curve, Poly::zero(F), poly_parse(b, F));
            EtaleCertificate cert = verify_etale_cover(t);
            json d{{"accepted", cert.accepted}};
            if (cert.accepted) {
                d["degree"] = cert.degree;
                d["c"] = cert.dt_constant.str();
            } else {
                d["rejection"] = cert.rejection;
            }
            return to_py(d);
        },
        py::arg("p"), py::arg("f"), py::arg("b"), py::arg("m") = 1,
        "verify a claimed cover t = b(x) y");

    mod.def(
        "poly_canon",
        [](i64 p, const std::string& text, int m) {
            const Field& F = Field::get(p, m);
            return poly_parse(text, F).str();
        },
        py::arg("p"), py::arg("text"), py::arg("m") = 1, "canonical form of a polynomial");
}
