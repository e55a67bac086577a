// qortho: generate the polynomial families, compute moment sequences, run
// the verification suites, and evaluate the numeric weights and products.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or domain error.

#include "qortho/analytic.hpp"
#include "qortho/families.hpp"
#include "qortho/json_io.hpp"
#include "qortho/qcore.hpp"
#include "qortho/suites.hpp"
#include "qortho/text.hpp"
#include "qortho/transforms.hpp"
#include "qortho/umbral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::ordered_json;
using namespace qortho;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

mpq_class parse_rational(const std::string& text) {
    try {
        mpq_class r(text);
        if (r.get_den() == 0) throw usage_error("zero denominator: " + text);
        r.canonicalize();
        return r;
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception&) {
        throw usage_error("not a rational number: " + text);
    }
}

// Family spec of the form "name" or "name(s=<rational>)".
struct FamilyArg {
    Family family;
    std::optional<mpq_class> s;
};

FamilyArg parse_family_arg(std::string text) {
    FamilyArg arg{Family::monomials, std::nullopt};
    auto open = text.find('(');
    if (open != std::string::npos) {
        if (text.back() != ')' || text.compare(open, 3, "(s=") != 0)
            throw usage_error("bad family argument: " + text);
        arg.s = parse_rational(text.substr(open + 3, text.size() - open - 4));
        text = text.substr(0, open);
    }
    auto f = family_from_string(text);
    if (!f) throw usage_error("unknown family: " + text);
    arg.family = *f;
    return arg;
}

Poly substitute_numeric(Poly p, const std::optional<mpq_class>& q_val,
                        const std::optional<mpq_class>& s_val) {
    if (s_val) p = p.subst_s(Scalar::from_mpq(*s_val));
    if (q_val)
        p = p.map_scalars([&](const Scalar& c) {
            return Scalar::from_mpq(c.eval_q_rational(*q_val));
        });
    return p;
}

int cmd_gen(const std::string& family_text, int n_max, const std::string& format,
            const std::optional<mpq_class>& q_val, const std::optional<mpq_class>& s_opt) {
    FamilyArg fa = parse_family_arg(family_text);
    std::optional<mpq_class> s_val = s_opt ? s_opt : fa.s;
    if (n_max < 0) throw usage_error("--n must be nonnegative");
    std::vector<Poly> rows;
    for (int n = 0; n <= n_max; ++n)
        rows.push_back(substitute_numeric(family_poly(fa.family, n), q_val, s_val));
    const std::string id(family_to_string(fa.family));
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (int n = 0; n <= n_max; ++n) arr.push_back(poly_record(id, n, rows[n]));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "family,n,polynomial\n";
        for (int n = 0; n <= n_max; ++n)
            std::cout << id << "," << n << "," << render_poly(rows[n]) << "\n";
    } else if (format == "latex") {
        for (int n = 0; n <= n_max; ++n) std::cout << render_poly_latex(rows[n]) << "\n";
    } else {
        throw usage_error("unknown format: " + format);
    }
    return 0;
}

int cmd_moments(const std::string& family_text, int upto, const std::string& format,
                const std::optional<mpq_class>& s_opt) {
    FamilyArg fa = parse_family_arg(family_text);
    if (upto < 0) throw usage_error("--upto must be nonnegative");
    std::optional<mpq_class> s_req = s_opt ? s_opt : fa.s;
    std::optional<Scalar> s_val;
    if (s_req) s_val = Scalar::from_mpq(*s_req);

    MomentFunctional mf = moments(fa.family, upto, s_val);
    // The closed column applies when the family has a formula and the s in
    // use matches the one the formula is stated at.
    bool closed = has_closed_moment(fa.family);
    if (closed) {
        auto stated = closed_moment_s(fa.family);
        if (stated.has_value() != s_val.has_value()) closed = false;
        if (stated && s_val && !(*stated == *s_val)) closed = false;
    }

    ordered_json arr = ordered_json::array();
    for (int n = 0; n <= upto; ++n) {
        ordered_json rec;
        rec["n"] = n;
        rec["value"] = render_poly(mf.lambda[n]);
        if (closed) {
            Poly cm = closed_moment(fa.family, n);
            rec["closed"] = render_poly(cm);
            rec["match"] = cm == mf.lambda[n];
        }
        arr.push_back(std::move(rec));
    }
    if (format == "json") {
        ordered_json out;
        out["family"] = std::string(family_to_string(fa.family));
        if (s_req) out["s"] = s_req->get_str();
        out["moments"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << (closed ? "n,value,closed,match\n" : "n,value\n");
        for (const auto& rec : arr) {
            std::cout << rec.at("n").get<int>() << "," << rec.at("value").get<std::string>();
            if (closed)
                std::cout << "," << rec.at("closed").get<std::string>() << ","
                          << (rec.at("match").get<bool>() ? "yes" : "no");
            std::cout << "\n";
        }
    } else {
        throw usage_error("unknown format: " + format);
    }
    return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, const std::string& format) {
    if (!is_suite_name(suite)) {
        std::cerr << "unknown suite: " << suite << "\nknown suites:";
        for (const auto& n : suite_names()) std::cerr << " " << n;
        std::cerr << "\n";
        return 2;
    }
    SuiteReport report = run_suite(suite, opt);
    if (format == "json") {
        ordered_json out;
        out["suite"] = report.suite;
        out["pass"] = report.pass;
        ordered_json checks = ordered_json::array();
        for (const auto& r : report.records) {
            ordered_json c;
            c["id"] = r.id;
            c["tag"] = r.tag;
            c["status"] = r.pass ? "pass" : "fail";
            c["detail"] = r.detail;
            checks.push_back(std::move(c));
        }
        out["checks"] = std::move(checks);
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : report.records) {
            std::printf("%-4s  %-14s  %-44s  %8.1f ms  %s\n", r.pass ? "PASS" : "FAIL",
                        r.tag.c_str(), r.id.c_str(), r.ms, r.detail.c_str());
        }
        std::printf("%s: %zu checks, %s (%.1f ms total)\n", report.suite.c_str(),
                    report.records.size(), report.pass ? "all passed" : "FAILURES",
                    report.total_ms);
    }
    return report.pass ? 0 : 1;
}

int cmd_eval(const std::string& kind, double x, int n, const std::optional<mpq_class>& q_opt,
             const std::optional<mpq_class>& s_opt, double t, double tol, int trunc) {
    NumericConfig cfg;
    if (q_opt) cfg.q = *q_opt;
    cfg.tol = tol;
    cfg.trunc_K = trunc;
    cfg.trunc_J = trunc;
    double result = 0.0;
    if (kind == "weight") {
        result = weight_density(x, cfg);
    } else if (kind == "circle_moment") {
        result = quadrature_moment(MeasureKind::qhermite_circle, Integrand::cosine, n, cfg);
    } else if (kind == "wrapped_moment") {
        result = wrapped_gauss_moment(n, cfg);
    } else if (kind == "product_gf") {
        GfParams p;
        p.x = x;
        p.s = s_opt ? s_opt->get_d() : 0.0;
        p.t = t;
        result = product_gf_check(ProductGfId::eq_5_10, cfg, p);
    } else {
        throw usage_error("unknown eval kind: " + kind);
    }
    std::printf("%.12g\n", result);
    return 0;
}

int cmd_transform(const std::string& what, const std::string& family_text,
                  const std::string& poly_text, const std::string& id_text, int n, int upto) {
    if (what == "to_basis") {
        FamilyArg fa = parse_family_arg(family_text);
        Poly p = parse_poly(poly_text);
        auto coeffs = to_basis(p, fa.family);
        ordered_json out;
        out["family"] = std::string(family_to_string(fa.family));
        out["poly"] = render_poly(p);
        ordered_json arr = ordered_json::array();
        for (const auto& c : coeffs) arr.push_back(render_poly(c));
        out["coefficients"] = std::move(arr);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (what == "connection") {
        auto id = connection_from_string(id_text);
        if (!id) throw usage_error("unknown connection identity: " + id_text);
        int lo = upto >= 0 ? 0 : n;
        int hi = upto >= 0 ? upto : n;
        bool all_pass = true;
        for (int m = lo; m <= hi; ++m) {
            ConnectionVerdict v = connection_check(*id, m);
            std::printf("%-4s  %-8s  n=%-3d  residual %s\n", v.pass ? "PASS" : "FAIL",
                        id_text.c_str(), m, render_poly(v.residual).c_str());
            all_pass = all_pass && v.pass;
        }
        return all_pass ? 0 : 1;
    }
    throw usage_error("unknown transform action: " + what);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-orthogonal polynomial toolkit"};
    app.require_subcommand(1);

    std::string family, format = "json", suite = "all", eval_kind, transform_what;
    std::string poly_text, conn_id;
    std::string q_text, s_text;
    std::vector<std::string> q_list;
    int n = 0, upto = 10, trunc = 60;
    double x = 0.0, t = 0.0, tol = 1e-6;

    auto* gen = app.add_subcommand("gen", "generate a family table");
    gen->add_option("family,--family", family)->required();
    gen->add_option("n,--n", n)->required();
    gen->add_option("format,--format", format);
    gen->add_option("--q", q_text);
    gen->add_option("--s", s_text);

    auto* mom = app.add_subcommand("moments", "moment sequence of a family functional");
    mom->add_option("family,--family", family)->required();
    mom->add_option("upto,--upto", upto)->required();
    mom->add_option("format,--format", format);
    mom->add_option("--s", s_text);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite,--suite", suite);
    ver->add_option("--upto", upto);
    ver->add_option("--q", q_list);
    ver->add_option("--tol", tol);
    ver->add_option("--trunc", trunc);
    std::string ver_format = "text";
    ver->add_option("--format", ver_format);

    auto* ev = app.add_subcommand("eval", "evaluate a numeric quantity");
    ev->add_option("kind,--kind", eval_kind)->required();
    ev->add_option("--x", x);
    ev->add_option("--n", n);
    ev->add_option("--q", q_text);
    ev->add_option("--s", s_text);
    ev->add_option("--t", t);
    ev->add_option("--tol", tol);
    ev->add_option("--trunc", trunc);

    auto* tr = app.add_subcommand("transform", "basis expansion and connection identities");
    tr->add_option("action,--action", transform_what)->required();
    tr->add_option("--family", family);
    tr->add_option("--poly", poly_text);
    tr->add_option("--id", conn_id);
    tr->add_option("--n", n);
    int tr_upto = -1;
    tr->add_option("--upto", tr_upto);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::optional<mpq_class> q_opt, s_opt;
        if (!q_text.empty()) q_opt = parse_rational(q_text);
        if (!s_text.empty()) s_opt = parse_rational(s_text);
        if (gen->parsed()) return cmd_gen(family, n, format, q_opt, s_opt);
        if (mom->parsed()) return cmd_moments(family, upto, format, s_opt);
        if (ver->parsed()) {
            SuiteOptions opt;
            opt.upto = upto;
            opt.tol = tol;
            opt.trunc = trunc;
            if (!q_list.empty()) {
                opt.q_values.clear();
                for (const auto& qs : q_list) {
                    mpq_class q = parse_rational(qs);
                    if (!(q > 0 && q < 1)) throw usage_error("q must lie in (0,1): " + qs);
                    opt.q_values.push_back(q);
                }
            }
            return cmd_verify(suite, opt, ver_format);
        }
        if (ev->parsed()) return cmd_eval(eval_kind, x, n, q_opt, s_opt, t, tol, trunc);
        if (tr->parsed())
            return cmd_transform(transform_what, family, poly_text, conn_id, n, tr_upto);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
