#include "xlag/cli/app.hpp"

#include "xlag/core/error.hpp"
#include "xlag/core/parse.hpp"
#include "xlag/exceptional/polynomials.hpp"
#include "xlag/numerics/orthogonality.hpp"
#include "xlag/ode/darboux.hpp"
#include "xlag/ode/expression.hpp"
#include "xlag/spectral/classification.hpp"
#include "xlag/spectral/probes.hpp"

#include <cmath>
#include <cstdio>

namespace xlag::cli {
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

std::vector<Family> families(const SuiteOptions& o) {
    if (o.family) return {*o.family};
    return {Family::TypeI, Family::TypeII, Family::TypeIII};
}

std::vector<int> ms(Family f, const SuiteOptions& o) {
    std::vector<int> out;
    for (int m = std::max(o.m.lo, min_m(f)); m <= o.m.hi; ++m) out.push_back(m);
    return out;
}

const double kEps = 1.0 / 64;

// Parameter grids for the quadrature suites.
std::vector<double> quadrature_alphas(Family f, int m) {
    switch (f) {
        case Family::TypeI: return {0.5, 1.5};
        case Family::TypeII: return {m - 0.5 + kEps, m + 0.5};
        case Family::TypeIII: return {-0.75, -0.5, -0.25};
    }
    return {};
}

// Twelve points per family, straddling every classification boundary.
std::vector<double> sweep_alphas(Family f, int m) {
    switch (f) {
        case Family::TypeI: return {0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 1.0, 1.01, 1.5, 2, 3, 5};
        case Family::TypeII:
            if (m == 0) return {-0.9, -0.75, -0.5, -0.25, 0.25, 0.5, 0.75, 0.99, 1.0, 1.5, 2, 3};
            if (m == 1) return {0.1, 0.25, 0.5, 0.75, 0.9, 0.99, 1.0, 1.01, 1.5, 2, 3, 5};
            {
                std::vector<double> v;
                for (double d : {0.01, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0}) v.push_back(m - 1 + d);
                return v;
            }
        case Family::TypeIII: return {-0.99, -0.9, -0.75, -0.6, -0.5, -0.4, -0.3, -0.25, -0.2, -0.1, -0.05, -0.01};
    }
    return {};
}

// A representative parameter for the boundary and growth probes.
double probe_alpha(Family f, int m) {
    if (f == Family::TypeIII) return -0.5;
    if (f == Family::TypeI || m == 0) return 0.5;
    return m - 0.5 + kEps;
}

std::vector<double> alphas_for(Family f, int m, const SuiteOptions& o, const std::vector<double>& grid) {
    if (!o.alpha) return grid;
    if (!alpha_admissible(f, m, *o.alpha)) {
        if (o.family) require_alpha(f, m, *o.alpha);
        return {};
    }
    return {*o.alpha};
}

std::string tag(Family f, int m, double a) {
    return family_name(f) + "/m=" + std::to_string(m) + "/a=" + num(a);
}

void identities(Report& r, const SuiteOptions& o) {
    for (Family f : families(o))
        for (int m : ms(f, o)) {
            std::string base = family_name(f) + "/m=" + std::to_string(m);
            for (int n : DegreeSet(f, m).up_to(m + o.k.hi))
                r.add("identities/eigen/" + base + "/n=" + std::to_string(n), eigen_residual(f, m, n).is_zero());
            auto fr = factorization_identity_report(f, m, 8);
            r.add("identities/factorization/" + base, fr.ok(),
                  std::string("lowering=") + (fr.lowering ? "ok" : "fail") + " raising=" + (fr.raising ? "ok" : "fail"));
            auto d = darboux_family_check(f, m);
            r.add("identities/darboux/" + base, d.ok(), "a0 offset " + d.a0_offset.to_string());
            if (f != Family::TypeIII) continue;
            r.add("identities/gauge/m=" + std::to_string(m), gauge_check(m, 8));
            for (int k = o.k.lo; k <= o.k.hi; ++k) {
                std::string mk = "m=" + std::to_string(m) + "/k=" + std::to_string(k);
                r.add("identities/lemma1/" + mk, lemma1_check(m, k));
                r.add("identities/lemma2/" + mk, lemma2_check(m, k));
                XPoly p = xlag3(m, m + k);
                bool same = xlag3_alt(m, m + k) == p && xlag3_integral(m, m + k) == p;
                r.add("identities/representations/" + mk, same);
            }
        }
}

void norms(Report& r, const SuiteOptions& o) {
    for (Family f : families(o))
        for (int m : ms(f, o))
            for (double a : alphas_for(f, m, o, quadrature_alphas(f, m))) {
                int nmax = o.nmax.value_or(m + 8);
                for (int n : DegreeSet(f, m).up_to(nmax)) {
                    std::string name = "norms/" + tag(f, m, a) + "/n=" + std::to_string(n);
                    RealPoly p = exceptional_at(f, m, n, a);
                    double expected = norm_closed_form(f, m, n, a);
                    try {
                        auto q = inner_product(f, m, a, p, p);
                        double rel = std::abs(q.value - expected) / std::abs(expected);
                        double tol = f == Family::TypeIII && n == 0 ? 1e-6 : 1e-8;
                        r.add(name, rel < tol, "rel_err=" + sci(rel));
                    } catch (const ToleranceNotMet& e) {
                        r.add(name, false, e.what());
                    }
                }
            }
}

void gram(Report& r, const SuiteOptions& o) {
    for (Family f : families(o))
        for (int m : ms(f, o))
            for (double a : alphas_for(f, m, o, quadrature_alphas(f, m))) {
                std::string name = "gram/" + tag(f, m, a);
                try {
                    auto g = gram_matrix(f, m, a, DegreeSet(f, m).up_to(o.nmax.value_or(m + 8)));
                    r.add(name, g.pass,
                          "diag=" + sci(g.max_diagonal_error) + " offdiag=" + sci(g.max_off_diagonal));
                } catch (const ToleranceNotMet& e) {
                    r.add(name, false, e.what());
                }
            }
}

std::string kind_text(EndpointKind k) { return k == EndpointKind::LimitCircle ? "LC" : "LP"; }

void spectral(Report& r, const SuiteOptions& o) {
    for (Family f : families(o))
        for (int m : ms(f, o)) {
            std::string base = family_name(f) + "/m=" + std::to_string(m);
            for (double a : alphas_for(f, m, o, sweep_alphas(f, m))) {
                if (a == 0.0) continue;
                auto c = classify(f, m, a);
                auto probe = l2_membership_probe(f, m, a, -a);
                bool lc = c.at_zero.kind == EndpointKind::LimitCircle;
                bool ok = probe.agrees && probe.integrable == lc &&
                          c.at_infinity.kind == EndpointKind::LimitPoint &&
                          c.deficiency == (lc ? DeficiencyIndex{1, 1} : DeficiencyIndex{0, 0});
                r.add("spectral/classify/" + tag(f, m, a), ok,
                      kind_text(c.at_zero.kind) + "@0 " + kind_text(c.at_infinity.kind) + "@inf (" +
                          std::to_string(c.deficiency.plus) + "," + std::to_string(c.deficiency.minus) + ")");
            }
            double a = o.alpha && alpha_admissible(f, m, *o.alpha) && *o.alpha != 0 ? *o.alpha : probe_alpha(f, m);
            bool sep = true;
            for (int n : DegreeSet(f, m).up_to(m + 6))
                sep = sep && boundary_functional(BoundaryKind::WeightedDerivative, a,
                                                 SmoothFunction::polynomial(exceptional_at(f, m, n, a)))
                                 .vanishes;
            sep = sep && !boundary_functional(BoundaryKind::WeightedDerivative, a, SmoothFunction::power(-a)).vanishes;
            r.add("spectral/boundary/" + tag(f, m, a), sep);
            auto g = second_solution_growth_probe(f, m, a, {5, 10, 20, 40});
            r.add("spectral/growth/" + tag(f, m, a), g.pass,
                  "second/first weighted at x=40: " + sci(g.second_weighted.back()) + "/" + sci(g.first_weighted.back()));
            if (f == Family::TypeIII) {
                for (int n : DegreeSet(f, m).first(5))
                    r.add("spectral/alternate/m=" + std::to_string(m) + "/n=" + std::to_string(n),
                          s_operator_eigen_check(m, n));
                if (m <= 2 && (!o.alpha || *o.alpha == -0.5))
                    for (int j = 0; j <= 6; ++j) {
                        auto pr = projection_residuals(f, m, -0.5, j, 12);
                        r.add("spectral/completeness/m=" + std::to_string(m) + "/j=" + std::to_string(j),
                              pr.non_increasing, "residual " + sci(pr.residual.front()) + " -> " + sci(pr.residual.back()));
                    }
            }
        }
}

void appendix(Report& r) {
    for (const auto& e : reference_type3_table()) {
        XPoly got = xlag3(e.m, e.n);
        r.add("appendix/m=" + std::to_string(e.m) + "/n=" + std::to_string(e.n), got == parse_xpoly(e.text),
              got.to_string());
    }
}

} // namespace

Report verify_suite(const std::string& suite, const SuiteOptions& opt) {
    Report r;
    r.command = "verify";
    bool all = suite == "all";
    if (!all && suite != "identities" && suite != "norms" && suite != "gram" && suite != "spectral" &&
        suite != "appendix")
        throw DomainError("unknown suite '" + suite + "'");
    if (opt.m.lo > opt.m.hi || opt.k.lo > opt.k.hi || opt.k.lo < 1 || opt.m.lo < 0)
        throw DomainError("empty or negative range");
    if (all || suite == "identities") identities(r, opt);
    if (all || suite == "norms") norms(r, opt);
    if (all || suite == "gram") gram(r, opt);
    if (all || suite == "spectral") spectral(r, opt);
    if (all || suite == "appendix") appendix(r);
    r.sort_records();
    return r;
}

} // namespace xlag::cli
