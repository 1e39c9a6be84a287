#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "etale/json_io.hpp"

using namespace etale;

namespace {

struct CommonArgs {
    i64 p = 0;
    int m = 1;
    std::string f_text;
};

const Field& field_of(const CommonArgs& c) { return Field::get(c.p, c.m); }

Curve curve_of(const CommonArgs& c) {
    const Field& F = field_of(c);
    return Curve::create(F, poly_parse(c.f_text, F));
}

json doc(const std::string& command) {
    json d;
    d["schema_version"] = 1;
    d["command"] = command;
    return d;
}

void emit(const json& d) { std::cout << d.dump(2) << "\n"; }

// why no etale cover exists, in the order the obstructions apply
std::string no_cover_reason(const Curve& curve) {
    const i64 p = curve.field().p();
    if ((2 * curve.genus() - 1) % p == 0) return "p divides 2g-1";
    Classification cls = classify(curve);
    if (cls.kind == CurveClass::ordinary) return "curve is ordinary";
    Poly h = half_power(curve);
    for (int i = 1; i <= curve.genus(); ++i) {
        int k = static_cast<int>(i * p) - 1;
        if (!h.coeff(k).is_zero())
            return "coefficient c_" + std::to_string(k) + " of f^((p-1)/2) is nonzero";
    }
    return "";
}

int run(int argc, char** argv) {
    CLI::App app{"exact tools for etale covers of the affine line from hyperelliptic models"};
    app.require_subcommand(1);

    CommonArgs c;
    bool tsv = false, json_flag = false;
    i64 degree = 0, bound = 0, g = 0, q = 0;
    int jobs = 1, ext = 2;
    std::string lambda_text, cover_text, family_id;

    auto add_field = [&](CLI::App* cmd, bool with_f = true) {
        cmd->add_option("--p", c.p, "characteristic")->required();
        cmd->add_option("--m", c.m, "extension degree");
        if (with_f) cmd->add_option("--f", c.f_text, "monic squarefree f in y^2 = f(x)")->required();
    };

    auto* cmd_table = app.add_subcommand("table", "supersingular curves and covers for odd p <= 17");
    cmd_table->add_flag("--tsv", tsv, "emit TSV instead of JSON");
    cmd_table->add_flag("--json", json_flag, "emit JSON (the default)");

    auto* cmd_ssj = app.add_subcommand("ss-j", "supersingular j-invariants in F_{p^2}");
    cmd_ssj->add_option("--p", c.p, "characteristic")->required();

    auto* cmd_cartier = app.add_subcommand("cartier", "Cartier matrix, classification, p-rank");
    add_field(cmd_cartier);
    i64 mpole = 0;
    cmd_cartier->add_option("--mpole", mpole, "pole bound m <= 0 of the domain Omega(mP)");

    auto* cmd_exists = app.add_subcommand("exists", "does an etale cover X\\P -> A^1 exist?");
    add_field(cmd_exists);

    auto* cmd_cover = app.add_subcommand("cover", "construct an etale cover certificate");
    add_field(cmd_cover);
    cmd_cover->add_option("--degree", degree, "admissible degree np (default: minimal)");

    auto* cmd_mindeg = app.add_subcommand("mindeg", "minimal degree by both algorithms");
    add_field(cmd_mindeg);

    auto* cmd_adm = app.add_subcommand("admissible", "admissible cover degrees up to a bound");
    add_field(cmd_adm);
    cmd_adm->add_option("--bound", bound, "largest degree to report")->required();

    auto* cmd_leg = app.add_subcommand("legendre", "Cartier coefficients of y^2 = x(x-1)(x-lambda)");
    cmd_leg->add_option("--p", c.p, "characteristic")->required();
    cmd_leg->add_option("--m", c.m, "extension degree");
    cmd_leg->add_option("--lambda", lambda_text, "lambda, a polynomial in t")->required();

    auto* cmd_search = app.add_subcommand("search", "enumerate cover-admitting curves over F_q");
    cmd_search->add_option("--p", c.p, "characteristic")->required();
    cmd_search->add_option("--g", g, "genus")->required();
    cmd_search->add_option("--q", q, "field size, a power of p")->required();
    cmd_search->add_option("--jobs", jobs, "worker threads (output independent of this)");
    cmd_search->add_flag("--tsv", tsv, "emit TSV instead of JSON");
    cmd_search->add_flag("--json", json_flag, "emit JSON (the default)");

    auto* cmd_family = app.add_subcommand("family", "pointwise checks of the genus-2 families");
    cmd_family->add_option("--id", family_id, "p5_a or p7_ab")->required();
    cmd_family->add_option("--ext", ext, "extension degree of the parameter field");

    auto* cmd_verify = app.add_subcommand("verify", "verify a claimed cover b(x)*y");
    add_field(cmd_verify);
    cmd_verify->add_option("--cover", cover_text, "the polynomial b(x)")->required();

    CLI11_PARSE(app, argc, argv);
    if (json_flag) tsv = false;

    if (cmd_table->parsed()) {
        if (tsv) {
            std::cout << table_tsv();
            return 0;
        }
        json d = doc("table");
        d.update(table_json());
        emit(d);
        return 0;
    }
    if (cmd_ssj->parsed()) {
        json d = doc("ss-j");
        d["p"] = c.p;
        json js = json::array();
        for (const Elem& j : supersingular_j_list(c.p)) js.push_back(j.str());
        d["j_list"] = js;
        emit(d);
        return 0;
    }
    if (cmd_cartier->parsed()) {
        Curve curve = curve_of(c);
        json d = doc("cartier");
        d["curve"] = curve_json(curve);
        d["matrix"] = matrix_json(cartier_matrix(curve, mpole));
        d["classification"] = classification_json(classify(curve));
        d["cover_exists"] = cover_exists(curve);
        emit(d);
        return 0;
    }
    if (cmd_exists->parsed()) {
        Curve curve = curve_of(c);
        bool ok = cover_exists(curve);
        json d = doc("exists");
        d["curve"] = curve_json(curve);
        d["exists"] = ok;
        if (!ok) d["reason"] = no_cover_reason(curve);
        emit(d);
        return ok ? 0 : 1;
    }
    if (cmd_cover->parsed()) {
        Curve curve = curve_of(c);
        CoverCertificate cert =
            degree > 0 ? build_cover_of_degree(curve, degree) : build_cover(curve);
        json d = doc("cover");
        d.update(cover_json(cert));
        emit(d);
        return 0;
    }
    if (cmd_mindeg->parsed()) {
        Curve curve = curve_of(c);
        i64 lin = minimal_degree_linalg(curve);
        CoverCertificate cert = build_cover(curve);
        json d = doc("mindeg");
        d["curve"] = curve_json(curve);
        d["linalg"] = lin;
        d["explicit"] = cert.degree;
        d["agree"] = lin == cert.degree;
        emit(d);
        return 0;
    }
    if (cmd_adm->parsed()) {
        Curve curve = curve_of(c);
        auto degrees = admissible_degrees(curve, bound);
        json d = doc("admissible");
        d["curve"] = curve_json(curve);
        d["bound"] = bound;
        d["n0"] = degrees.empty() ? 0 : degrees.front() / c.p;
        d["degrees"] = degrees;
        emit(d);
        return 0;
    }
    if (cmd_leg->parsed()) {
        const Field& F = field_of(c);
        Elem lambda = parse_element(lambda_text, F);
        json d = doc("legendre");
        d["p"] = c.p;
        d["m"] = c.m;
        d.update(legendre_json(lambda));
        emit(d);
        return 0;
    }
    if (cmd_search->parsed()) {
        SearchReport report = search_Eg(c.p, static_cast<int>(g), q, jobs);
        if (tsv) {
            std::cout << search_tsv(report);
            return 0;
        }
        json d = doc("search");
        d.update(search_json(report));
        emit(d);
        return 0;
    }
    if (cmd_family->parsed()) {
        FamilyReport report = family_check(family_id, ext);
        json d = doc("family");
        d.update(family_json(report));
        emit(d);
        return 0;
    }
    if (cmd_verify->parsed()) {
        Curve curve = curve_of(c);
        const Field& F = curve.field();
        AffineFunction t(curve, Poly::zero(F), poly_parse(cover_text, F));
        EtaleCertificate cert = verify_etale_cover(t);
        json d = doc("verify");
        d["curve"] = curve_json(curve);
        d["t"] = function_json(t);
        d["accepted"] = cert.accepted;
        if (cert.accepted) {
            d["degree"] = cert.degree;
            d["c"] = cert.dt_constant.str();
        } else {
            d["rejection"] = cert.rejection;
        }
        emit(d);
        return cert.accepted ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        if (e.is_mathematical()) {
            json d;
            d["schema_version"] = 1;
            d["command"] = "error";
            d["error"] = json{{"code", errc_name(e.code())}, {"message", e.what()}};
            std::cout << d.dump(2) << "\n";
            return 1;
        }
        std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
