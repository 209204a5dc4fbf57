#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "cubiq/cubiq.hpp"

namespace cubiq::cli {

std::string Record::text() const {
    std::string s;
    for (const auto& [k, v] : kv) s += k + " = " + v + "\n";
    return s;
}

std::string Record::json() const {
    nlohmann::ordered_json obj;
    for (const auto& [k, v] : kv) obj[k] = v;
    return obj.dump() + "\n";
}

namespace {

std::string error_kind(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "parse-error";
    if (dynamic_cast<const DegenerateParameter*>(&e)) return "degenerate-parameter";
    if (dynamic_cast<const NotInNormalForm*>(&e)) return "not-in-normal-form";
    if (dynamic_cast<const UnresolvableFactor*>(&e)) return "unresolvable-factor";
    if (dynamic_cast<const TooFewCriticalPoints*>(&e)) return "too-few-critical-points";
    if (dynamic_cast<const InvalidCriticalData*>(&e)) return "invalid-critical-data";
    if (dynamic_cast<const MixedRadicand*>(&e)) return "mixed-radicand";
    return "domain-error";
}

std::string field_marker(const Int& radicand) {
    return sgn(radicand) == 0 ? "Q" : "Q(sqrt(" + radicand.get_str() + "))";
}

std::string print_mobius(const Mobius<QuadExt>& m) {
    return print_ratfunc_quadext(to_ratfunc(m));
}

Record do_normalize(const std::string& f_text) {
    RatFunc<Rat> f = parse_ratfunc(f_text);
    NormalizeResult r = normalize_cubic(f);
    Record rec;
    rec.add("u", r.u.to_string());
    rec.add("field", field_marker(r.radicand));
    rec.add("tau", print_mobius(r.tau));
    rec.add("sigma", print_mobius(r.sigma));
    return rec;
}

Record do_solve(const std::vector<std::string>& pts) {
    std::vector<CriticalPoint> crit;
    for (const std::string& s : pts) crit.emplace_back(embed_point(parse_point(s)), 1);
    SolveResult res = cubics_with_critical_quad(CriticalQuad(std::move(crit)));

    Record rec;
    rec.add("classes", std::to_string(res.classes.size()));
    int i = 0;
    for (const CubicClass& c : res.classes) {
        ++i;
        const auto& g = std::get<GenericClass>(c);
        std::string key = "class." + std::to_string(i);
        rec.add(key + ".u", g.u.to_string());
        rec.add(key + ".field", field_marker(g.radicand));
        rec.add(key + ".tau", print_mobius(g.tau));
        rec.add(key + ".rep", print_ratfunc_quadext(representative(g)));
    }
    if (!res.excluded.empty()) {
        std::string ex;
        for (size_t j = 0; j < res.excluded.size(); ++j) {
            if (j) ex += " ";
            ex += res.excluded[j].to_string();
        }
        rec.add("excluded", ex);
    }
    return rec;
}

Record do_equiv(const std::string& f_text, const std::string& g_text) {
    RatFunc<Rat> f = parse_ratfunc(f_text);
    RatFunc<Rat> g = parse_ratfunc(g_text);
    Record rec;
    if (auto sigma = equivalent(f, g)) {
        rec.add("equivalent", "true");
        rec.add("sigma", print_ratfunc(to_ratfunc(*sigma)));
    } else {
        rec.add("equivalent", "false");
    }
    return rec;
}

Record do_phi(const std::string& u_text) {
    ProjPoint<Rat> img = phi(parse_point(u_text));
    Record rec;
    rec.add("phi", print_point(img));
    return rec;
}

Record verdict_record(const SolvabilityVerdict& v) {
    Record rec;
    for (auto& [k, val] : v.record()) rec.add(k, val);
    return rec;
}

Record do_fpscan(long long p) {
    FpScanResult s = fp_scan(p);
    Record rec;
    rec.add("p", std::to_string(s.p));
    rec.add("reduced_degree", std::to_string(s.reduced_degree));
    rec.add("surjective", s.surjective ? "true" : "false");
    std::string img;
    for (size_t i = 0; i < s.image_finite.size(); ++i) {
        if (i) img += " ";
        img += std::to_string(s.image_finite[i]);
    }
    if (s.image_infinity) img += img.empty() ? "inf" : " inf";
    rec.add("image", img);
    std::string miss;
    for (size_t i = 0; i < s.missing.size(); ++i) {
        if (i) miss += " ";
        miss += std::to_string(s.missing[i]);
    }
    rec.add("missing", miss.empty() ? "(none)" : miss);
    return rec;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for cubic rational maps on the projective line"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit one self-describing JSON record");

    std::string norm_f;
    auto* c_norm = app.add_subcommand("normalize", "source/target changes onto the normal form");
    c_norm->add_option("function", norm_f, "cubic rational function, e.g. \"(x^3+x^2) / (5x-3)\"")
        ->required();

    std::vector<std::string> solve_pts;
    auto* c_solve = app.add_subcommand("solve", "all cubic classes with the given critical points");
    c_solve->add_option("points", solve_pts, "four points (rationals or inf)")
        ->expected(4)
        ->required();

    std::string eq_f, eq_g;
    auto* c_equiv = app.add_subcommand("equiv", "find sigma with f = sigma o g, if any");
    c_equiv->add_option("f", eq_f)->required();
    c_equiv->add_option("g", eq_g)->required();

    std::string phi_u;
    auto* c_phi = app.add_subcommand("phi", "the fourth critical point of the normal form at u");
    c_phi->add_option("u", phi_u, "rational or inf")->required();

    std::string perfect_p;
    bool perfect_real = false;
    auto* c_perf = app.add_subcommand("perfect", "surjectivity verdict with witness");
    c_perf->add_option("--p", perfect_p, "analyze Q_p");
    c_perf->add_flag("--real", perfect_real, "analyze R");

    long long scan_p = 0;
    auto* c_scan = app.add_subcommand("fpscan", "image of the reduced map over P^1(F_p)");
    c_scan->add_option("--p", scan_p, "prime")->required();

    long bound_d = 0;
    auto* c_bound = app.add_subcommand("bound", "class-count bound rho(d)");
    c_bound->add_option("--d", bound_d, "degree >= 2")->required();

    std::vector<const char*> argv;
    argv.push_back("cubiq");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        Record rec;
        rec.add("error.kind", "parse-error");
        rec.add("error.detail", e.what());
        out << (json ? rec.json() : rec.text());
        return 1;
    }

    try {
        Record rec;
        if (c_norm->parsed()) {
            rec = do_normalize(norm_f);
        } else if (c_solve->parsed()) {
            rec = do_solve(solve_pts);
        } else if (c_equiv->parsed()) {
            rec = do_equiv(eq_f, eq_g);
        } else if (c_phi->parsed()) {
            rec = do_phi(phi_u);
        } else if (c_perf->parsed()) {
            if (perfect_real == perfect_p.empty())
                throw DomainError("perfect needs exactly one of --real or --p <prime>");
            rec = perfect_real ? verdict_record(real_verdict())
                               : verdict_record(qp_perfect(Int(perfect_p)));
        } else if (c_scan->parsed()) {
            rec = do_fpscan(scan_p);
        } else if (c_bound->parsed()) {
            rec.add("rho", catalan_bound(bound_d).get_str());
        }
        out << (json ? rec.json() : rec.text());
        return 0;
    } catch (const Error& e) {
        Record rec;
        rec.add("error.kind", error_kind(e));
        rec.add("error.detail", e.what());
        out << (json ? rec.json() : rec.text());
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cubiq::cli
