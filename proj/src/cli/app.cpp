#include "xlag/cli/app.hpp"

#include "xlag/core/error.hpp"
#include "xlag/exceptional/polynomials.hpp"
#include "xlag/numerics/interlacing.hpp"
#include "xlag/numerics/orthogonality.hpp"
#include "xlag/ode/expression.hpp"
#include "xlag/spectral/classification.hpp"
#include "xlag/spectral/probes.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace xlag::cli {

IntRange parse_range(const std::string& s) {
    auto to_int = [&](const std::string& t) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (t.empty() || used != t.size()) throw DomainError("bad range '" + s + "' (expected N or LO..HI)");
        return v;
    };
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = to_int(s);
        return {v, v};
    }
    IntRange r{to_int(s.substr(0, dots)), to_int(s.substr(dots + 2))};
    if (r.lo > r.hi) throw DomainError("empty range '" + s + "'");
    return r;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_range(tok).lo);
    if (out.empty()) throw DomainError("empty list");
    return out;
}

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

struct Output {
    std::string format = "text";
    std::string path;
    bool timing = false;

    void attach(CLI::App* sub) {
        sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", path, "write to PATH instead of stdout");
        sub->add_flag("--timing", timing, "include wall-clock time in the report");
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Writes the rendered report to --out or to the given stream.
void emit(const Output& o, const std::string& rendered, std::ostream& out) {
    if (o.path.empty()) {
        out << rendered;
        return;
    }
    std::ofstream f(o.path, std::ios::binary);
    if (!f) throw DomainError("cannot open '" + o.path + "' for writing");
    f << rendered;
}

std::string render(const Report& r, const Output& o, bool color, const std::string& csv = {}) {
    std::ostringstream ss;
    switch (parse_format(o.format)) {
        case Format::Json: ss << to_json(r).dump(2) << '\n'; break;
        case Format::Csv:
            if (!csv.empty())
                ss << csv;
            else
                write_csv(r, ss);
            break;
        case Format::Text: write_text(r, ss, color && o.path.empty()); break;
    }
    return ss.str();
}

nlohmann::ordered_json doubles(const std::vector<double>& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (double x : v) a.push_back(x);
    return a;
}

std::string list_text(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
    return s + "]";
}

// gen ------------------------------------------------------------------

struct GenArgs {
    std::string family;
    int m = 1;
    std::string n;
    Output out;
};

Report gen(const GenArgs& g, std::string& csv) {
    Family f = parse_family(g.family);
    if (g.m < min_m(f)) throw DomainError("m must be at least " + std::to_string(min_m(f)) + " for Type " + family_name(f));
    IntRange nr = parse_range(g.n);
    DegreeSet ds(f, g.m);
    std::vector<int> degrees;
    if (nr.lo == nr.hi) {
        ds.require(nr.lo);
        degrees = {nr.lo};
    } else {
        for (int n = std::max(nr.lo, 0); n <= nr.hi; ++n)
            if (ds.contains(n)) degrees.push_back(n);
    }
    Report r;
    r.command = "gen";
    r.parameters = {{"family", family_name(f)}, {"m", std::to_string(g.m)}, {"n", g.n}};
    std::vector<TableRow> rows;
    auto polys = nlohmann::ordered_json::array();
    std::string text;
    for (int n : degrees) {
        XPoly p = exceptional(f, g.m, n);
        rows.push_back({family_name(f), g.m, n, p});
        polys.push_back({{"family", family_name(f)}, {"m", g.m}, {"n", n}, {"text", p.to_string()}, {"coefficients", xpoly_json(p)}});
        if (degrees.size() == 1)
            text += p.to_string() + "\n";
        else
            text += "n=" + std::to_string(n) + ": " + p.to_string() + "\n";
    }
    r.data["polynomials"] = polys;
    r.text = text;
    std::ostringstream ss;
    write_table_csv(rows, ss);
    csv = ss.str();
    return r;
}

// verify / norms -------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    std::string family;
    std::string m = "1..3";
    std::string k = "1..8";
    std::optional<double> alpha;
    std::optional<int> nmax;
    Output out;
};

void attach_verify(CLI::App* sub, VerifyArgs& v) {
    sub->add_option("--family", v.family, "I, II or III (default: all)");
    sub->add_option("--m", v.m, "codimension range LO..HI");
    sub->add_option("--k", v.k, "degree offset range LO..HI");
    sub->add_option("--alpha", v.alpha, "single parameter value instead of the default grid");
    sub->add_option("--nmax", v.nmax, "largest degree for norms and gram (default m+8)");
    v.out.attach(sub);
}

Report verify(const VerifyArgs& v) {
    SuiteOptions o;
    if (!v.family.empty()) o.family = parse_family(v.family);
    o.m = parse_range(v.m);
    o.k = parse_range(v.k);
    o.alpha = v.alpha;
    o.nmax = v.nmax;
    Report r = verify_suite(v.suite, o);
    r.parameters = {{"suite", v.suite}, {"family", v.family.empty() ? "all" : family_name(*o.family)},
                    {"m", v.m}, {"k", v.k}};
    if (v.alpha) r.parameters.emplace_back("alpha", num(*v.alpha));
    if (v.nmax) r.parameters.emplace_back("nmax", std::to_string(*v.nmax));
    return r;
}

// roots ----------------------------------------------------------------

struct RootsArgs {
    int m = 1;
    int k = 1;
    double alpha = -0.5;
    std::string asymptotics;
    Output out;
};

Report roots(const RootsArgs& a, std::string& csv) {
    if (a.m < 1 || a.k < 1) throw DomainError("m and k must be at least 1");
    require_alpha(Family::TypeIII, a.m, a.alpha);
    auto rep = interlacing_check(a.m, a.k, a.alpha);
    bool negative_at_zero = negativity_at_zero_check(a.m, a.k, a.alpha);
    Report r;
    r.command = "roots";
    r.parameters = {{"m", std::to_string(a.m)}, {"k", std::to_string(a.k)}, {"alpha", num(a.alpha)}};
    r.add("roots/counts", rep.counts_ok,
          std::to_string(rep.positive_roots.size()) + " positive, " + std::to_string(rep.negative_roots.size()) +
              " negative, " + std::to_string(rep.complex_roots.size()) + " complex");
    auto all_true = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
    r.add("roots/intervals/positive", rep.counts_ok && all_true(rep.positive_intervals));
    r.add("roots/intervals/negative", rep.counts_ok && all_true(rep.negative_intervals));
    r.add("roots/simple", rep.simple);
    r.add("roots/negative_at_zero", negative_at_zero);

    auto cplx = nlohmann::ordered_json::array();
    for (auto z : rep.complex_roots) cplx.push_back({z.real(), z.imag()});
    r.data["pos"] = doubles(rep.positive_roots);
    r.data["neg"] = doubles(rep.negative_roots);
    r.data["complex"] = cplx;
    r.data["reference_pos"] = doubles(rep.reference_positive);
    r.data["reference_neg"] = doubles(rep.reference_negative);
    r.data["verdict"] = rep.pass && negative_at_zero ? "pass" : "fail";

    std::string text = "pos: " + list_text(rep.positive_roots) + "\nneg: " + list_text(rep.negative_roots) + "\n";
    std::ostringstream c;
    c << "kind,index,value,reference,in_interval\n";
    auto rows = [&](const char* kind, const std::vector<double>& v, const std::vector<double>& ref,
                    const std::vector<bool>& ok) {
        for (std::size_t i = 0; i < v.size(); ++i)
            c << kind << ',' << i << ',' << num(v[i]) << ',' << (i < ref.size() ? num(ref[i]) : "") << ','
              << (i < ok.size() && ok[i] ? "true" : "false") << '\n';
    };
    rows("positive", rep.positive_roots, rep.reference_positive, rep.positive_intervals);
    rows("negative", rep.negative_roots, rep.reference_negative, rep.negative_intervals);

    if (!a.asymptotics.empty()) {
        auto t = asymptotics_probe(Family::TypeIII, a.m, a.alpha, parse_int_list(a.asymptotics));
        auto table = nlohmann::ordered_json::array();
        text += "k  exceptional_distance  first_positive_root\n";
        for (const auto& row : t.rows) {
            table.push_back({{"k", row.k},
                             {"exceptional_distance", row.exceptional_distance},
                             {"first_positive_root", row.first_positive_root}});
            text += std::to_string(row.k) + "  " + sci(row.exceptional_distance) + "  " + num(row.first_positive_root) + "\n";
            c << "exceptional_distance," << row.k << ',' << num(row.exceptional_distance) << ",,\n";
            c << "first_positive_root," << row.k << ',' << num(row.first_positive_root) << ",,\n";
        }
        r.data["asymptotics"] = table;
        for (const auto& [name, ok] : t.trends) r.add("asymptotics/" + name + "/decreasing", ok);
    }
    text += std::string("verdict: ") + (r.passed() ? "pass" : "fail") + "\n";
    r.text = text;
    r.sort_records();
    csv = c.str();
    return r;
}

// spectral -------------------------------------------------------------

struct SpectralArgs {
    std::string op;
    int m = 1;
    double alpha = 0;
    int cutoff = 6;
    Output out;
};

std::string kind_text(EndpointKind k) { return k == EndpointKind::LimitCircle ? "LC" : "LP"; }

Report spectral_cmd(const SpectralArgs& s) {
    OperatorTag op = parse_operator(s.op);
    Family f = operator_family(op);
    if (s.cutoff < 1) throw DomainError("cutoff must be positive");
    require_operator_alpha(op, s.m, s.alpha);
    // The alternate operator is the Type I expression; its eigenfunctions are
    // x^{-a} times Type III polynomials at -a.
    Family expr_family = op == OperatorTag::TypeIAlt ? Family::TypeI : f;
    if (s.m < min_m(expr_family)) throw DomainError("m out of range");
    auto c = classify(expr_family, s.m, s.alpha);
    BoundaryKind bc = boundary_condition(op, s.m, s.alpha);
    auto sp = spectrum(op, s.m, s.alpha, s.cutoff);

    Report r;
    r.command = "spectral";
    r.parameters = {{"op", operator_name(op)}, {"m", std::to_string(s.m)}, {"alpha", num(s.alpha)},
                    {"cutoff", std::to_string(s.cutoff)}};
    r.data["at_zero"] = kind_text(c.at_zero.kind);
    r.data["at_infinity"] = kind_text(c.at_infinity.kind);
    r.data["deficiency"] = {c.deficiency.plus, c.deficiency.minus};
    r.data["boundary_condition"] = boundary_text(bc);
    r.data["spectrum_rule"] = sp.description;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : sp.entries) entries.push_back({{"n", e.degree}, {"eigenvalue", e.eigenvalue}});
    r.data["spectrum"] = entries;

    std::string t;
    t += "operator: " + operator_name(op) + "  m=" + std::to_string(s.m) + "  a=" + num(s.alpha) + "\n";
    t += "endpoint 0: " + kind_text(c.at_zero.kind) + "\n";
    t += "endpoint inf: " + kind_text(c.at_infinity.kind) + "\n";
    t += "deficiency: (" + std::to_string(c.deficiency.plus) + "," + std::to_string(c.deficiency.minus) + ")\n";
    t += "boundary condition: " + boundary_text(bc) + "\n";
    t += "spectrum: " + sp.description + "\n";
    for (const auto& e : sp.entries) t += "  n=" + std::to_string(e.degree) + "  " + num(e.eigenvalue) + "\n";
    r.text = t;

    // Corroborating checks.
    auto probe = l2_membership_probe(expr_family, s.m, s.alpha, -s.alpha);
    r.add("spectral/l2_probe", probe.agrees && probe.integrable == (c.at_zero.kind == EndpointKind::LimitCircle),
          std::string("x^{-a} square integrable near 0: ") + (probe.integrable ? "yes" : "no"));
    bool eig = true;
    for (const auto& e : sp.entries)
        eig = eig && (op == OperatorTag::TypeIAlt ? s_operator_eigen_check(s.m, e.degree)
                                                  : eigen_residual(f, s.m, e.degree).is_zero());
    r.add("spectral/eigenfunctions", eig);
    if (bc == BoundaryKind::None) {
        r.records.push_back({"spectral/boundary", Status::Skip, "no boundary condition at 0"});
    } else {
        bool sep = true;
        for (const auto& e : sp.entries) {
            auto fn = op == OperatorTag::TypeIAlt
                          ? SmoothFunction::power_times(-s.alpha, exceptional_at(Family::TypeIII, s.m, e.degree, -s.alpha))
                          : SmoothFunction::polynomial(exceptional_at(f, s.m, e.degree, s.alpha));
            sep = sep && boundary_functional(bc, s.alpha, fn).vanishes;
        }
        auto other = op == OperatorTag::TypeIAlt ? SmoothFunction::power(0) : SmoothFunction::power(-s.alpha);
        sep = sep && !boundary_functional(bc, s.alpha, other).vanishes;
        r.add("spectral/boundary", sep, "eigenfunctions satisfy the condition, the other solution does not");
    }
    auto g = second_solution_growth_probe(expr_family, s.m, s.alpha, {5, 10, 20, 40});
    r.add("spectral/growth_at_infinity", g.pass, "second solution is not square integrable at infinity");
    r.sort_records();
    return r;
}

template <class F>
int guarded(F&& body, std::ostream& err) {
    try {
        return body();
    } catch (const DegreeNotAdmissible& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& opt) {
    CLI::App app{"Exceptional X_m-Laguerre polynomials: generation and verification", "xlag"};
    app.require_subcommand(1);

    GenArgs g;
    auto* gen_cmd = app.add_subcommand("gen", "print exceptional polynomials");
    gen_cmd->add_option("--family", g.family, "I, II or III")->required();
    gen_cmd->add_option("--m", g.m, "codimension")->required();
    gen_cmd->add_option("--n", g.n, "degree N or range LO..HI")->required();
    g.out.attach(gen_cmd);

    VerifyArgs v;
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", v.suite, "identities, norms, gram, spectral, appendix or all")
        ->check(CLI::IsMember({"identities", "norms", "gram", "spectral", "appendix", "all"}));
    attach_verify(verify_cmd, v);

    VerifyArgs nv;
    nv.suite = "norms";
    auto* norms_cmd = app.add_subcommand("norms", "same as verify --suite norms");
    attach_verify(norms_cmd, nv);

    RootsArgs ra;
    auto* roots_cmd = app.add_subcommand("roots", "locate and check the zeros of a Type III polynomial");
    roots_cmd->add_option("--m", ra.m, "codimension")->required();
    roots_cmd->add_option("--k", ra.k, "degree offset, n = m + k")->required();
    roots_cmd->add_option("--alpha", ra.alpha, "parameter in (-1, 0)")->required();
    roots_cmd->add_option("--asymptotics", ra.asymptotics, "comma-separated increasing k values");
    ra.out.attach(roots_cmd);

    SpectralArgs sa;
    auto* spectral_cmd_app = app.add_subcommand("spectral", "endpoint classification and spectrum");
    spectral_cmd_app->add_option("--op", sa.op, "T_I, T_II, T_III or S_I")->required();
    spectral_cmd_app->add_option("--m", sa.m, "codimension")->required();
    spectral_cmd_app->add_option("--alpha", sa.alpha, "parameter")->required();
    spectral_cmd_app->add_option("--cutoff", sa.cutoff, "number of spectrum entries to list");
    sa.out.attach(spectral_cmd_app);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    auto finish = [&](Report& r, const Output& o, Clock::time_point t0, const std::string& csv = {}) {
        if (o.timing) r.seconds = seconds_since(t0);
        emit(o, render(r, o, opt.color, csv), out);
        return r.passed() ? 0 : 1;
    };

    return guarded(
        [&]() -> int {
            auto t0 = Clock::now();
            if (gen_cmd->parsed()) {
                std::string csv;
                Report r = gen(g, csv);
                return finish(r, g.out, t0, csv);
            }
            if (verify_cmd->parsed()) {
                Report r = verify(v);
                return finish(r, v.out, t0);
            }
            if (norms_cmd->parsed()) {
                Report r = verify(nv);
                r.command = "norms";
                return finish(r, nv.out, t0);
            }
            if (roots_cmd->parsed()) {
                std::string csv;
                Report r = roots(ra, csv);
                return finish(r, ra.out, t0, csv);
            }
            Report r = spectral_cmd(sa);
            return finish(r, sa.out, t0);
        },
        err);
}

} // namespace xlag::cli
