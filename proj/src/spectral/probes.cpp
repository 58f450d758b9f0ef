#include "xlag/spectral/probes.hpp"

#include "xlag/core/error.hpp"
#include "xlag/numerics/orthogonality.hpp"
#include "xlag/exceptional/polynomials.hpp"
#include "xlag/numerics/quadrature.hpp"
#include "xlag/ode/weight.hpp"

#include <algorithm>
#include <cmath>

namespace xlag {

namespace {

// Repeated Aitken delta-squared on a sequence converging geometrically.
double aitken_limit(std::vector<double> s) {
    while (s.size() >= 3) {
        std::vector<double> t;
        for (std::size_t i = 0; i + 2 < s.size(); ++i) {
            double d1 = s[i + 1] - s[i], d2 = s[i + 2] - s[i + 1];
            double den = d2 - d1;
            if (den == 0 || !std::isfinite(den))
                t.push_back(s[i + 2]);
            else
                t.push_back(s[i + 2] - d2 * d2 / den);
        }
        // Stop once another pass no longer helps.
        double before = std::abs(s.back() - s[s.size() - 2]);
        double after = t.size() >= 2 ? std::abs(t.back() - t[t.size() - 2]) : 0.0;
        s = std::move(t);
        if (after >= before) break;
    }
    return s.back();
}

double scale_of(const SmoothFunction& f) {
    double s = 0;
    for (int i = 0; i <= 90; ++i) {
        double x = 0.1 + 0.01 * i;
        s = std::max({s, std::abs(f.value(x)), std::abs(f.derivative(x))});
    }
    return s == 0 ? 1.0 : s;
}

LimitEstimate extrapolate(const std::function<double(double)>& g, double scale) {
    LimitEstimate e;
    for (int k = 2; k <= 10; ++k) {
        double x = std::pow(10.0, -k);
        e.xs.push_back(x);
        e.samples.push_back(g(x));
    }
    e.limit = aitken_limit(e.samples);
    e.scale = scale;
    e.vanishes = std::abs(e.limit) < 1e-8 * scale;
    return e;
}

XPoly lowest_eigenpolynomial(Family f, int m, const Alpha& al) {
    return exceptional(f, m, DegreeSet(f, m).first(1).front(), al);
}

} // namespace

SmoothFunction SmoothFunction::polynomial(const RealPoly& p) {
    RealPoly d = p.derivative();
    return {[p](double x) { return p.eval(x); }, [d](double x) { return d.eval(x); }};
}

SmoothFunction SmoothFunction::power_times(double s, const RealPoly& p) {
    RealPoly d = p.derivative();
    return {[=](double x) { return std::pow(x, s) * p.eval(x); },
            [=](double x) { return std::pow(x, s - 1) * (s * p.eval(x) + x * d.eval(x)); }};
}

SmoothFunction SmoothFunction::power(double s) {
    return {[s](double x) { return std::pow(x, s); }, [s](double x) { return s * std::pow(x, s - 1); }};
}

L2Probe l2_membership_probe(Family f, int m, double a, double s, double x_star) {
    if (!(x_star > 0 && x_star <= 1)) throw DomainError("l2_membership_probe needs x* in (0, 1]");
    WeightSpec w(f, m, a);
    L2Probe p;
    p.exponent = 2 * s + a;
    p.integrable = p.exponent > -1;
    auto integrand = [&](double x) { return std::pow(x, 2 * s) * w(x); };
    double hi = x_star;
    for (int k = 0; k < 6; ++k) {
        double lo = hi / 100;
        p.decade_integrals.push_back(integrate_interval(integrand, lo, hi).value);
        hi = lo;
    }
    const auto& d = p.decade_integrals;
    double ratio = d.back() / d[d.size() - 2];
    p.numeric_integrable = ratio < 1 - 1e-6;
    p.agrees = p.numeric_integrable == p.integrable;
    return p;
}

double sesquilinear_form(Family f, int m, double a, const SmoothFunction& u, const SmoothFunction& v, double x) {
    if (!(x > 0)) throw DomainError("sesquilinear form is evaluated at x > 0");
    WeightSpec w(f, m, a);
    double eta = w.eta().eval(x);
    double p = std::pow(x, a + 1) * std::exp(-x) / (eta * eta);
    return p * (u.value(x) * v.derivative(x) - u.derivative(x) * v.value(x));
}

LimitEstimate boundary_functional(BoundaryKind kind, double a, const SmoothFunction& f) {
    std::function<double(double)> g;
    switch (kind) {
    case BoundaryKind::WeightedDerivative: g = [&](double x) { return std::pow(x, a + 1) * f.derivative(x); }; break;
    case BoundaryKind::EulerCombination: g = [&](double x) { return x * f.derivative(x) + a * f.value(x); }; break;
    case BoundaryKind::None: throw DomainError("no boundary condition to evaluate");
    }
    return extrapolate(g, scale_of(f));
}

LimitEstimate sesquilinear_limit_at_zero(Family f, int m, double a, const SmoothFunction& u,
                                         const SmoothFunction& v) {
    WeightSpec w(f, m, a);
    auto g = [&](double x) {
        double eta = w.eta().eval(x);
        double p = std::pow(x, a + 1) * std::exp(-x) / (eta * eta);
        return p * (u.value(x) * v.derivative(x) - u.derivative(x) * v.value(x));
    };
    return extrapolate(g, std::max(scale_of(u), scale_of(v)));
}

GrowthProbe second_solution_growth_probe(Family f, int m, double a, const std::vector<double>& xs) {
    if (xs.size() < 2) throw DomainError("growth probe needs at least two points");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 5 || xs[i] > 40) throw DomainError("growth probe points must lie in [5, 40]");
        if (i > 0 && xs[i] <= xs[i - 1]) throw DomainError("growth probe points must increase");
    }
    WeightSpec w(f, m, a);
    Rational av = from_double(a);
    RealPoly y1 = substitute_alpha(lowest_eigenpolynomial(f, m, Alpha::at(av)), av);
    auto integrand = [&](double t) {
        double y = y1.eval(t);
        return 1.0 / (t * w(t) * y * y);
    };
    GrowthProbe g;
    g.xs = xs;
    double acc = 0, from = 1.0;
    QuadratureOptions opt;
    opt.abs_tol = 0;
    for (double x : xs) {
        auto r = integrate_interval(integrand, from, x, opt);
        if (!r.converged) throw ConvergenceFailure("growth probe quadrature did not converge");
        acc += r.value;
        from = x;
        double y = y1.eval(x);
        double wx = w(x);
        g.second_weighted.push_back(y * acc * y * acc * wx);
        g.first_weighted.push_back(y * y * wx);
    }
    // Strict increase everywhere; the exp(dx/2) rate is only asymptotic, so it
    // is required on the last step.
    const std::size_t last = xs.size() - 1;
    g.second_grows = g.second_weighted[last] >=
                     g.second_weighted[last - 1] * std::exp((xs[last] - xs[last - 1]) / 2);
    g.first_bounded = true;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(g.second_weighted[i] > g.second_weighted[i - 1])) g.second_grows = false;
        if (!(g.first_weighted[i] < g.first_weighted[i - 1])) g.first_bounded = false;
    }
    g.pass = g.second_grows && g.first_bounded;
    return g;
}

ProjectionResiduals projection_residuals(Family f, int m, double a, int power, int max_terms) {
    if (power < 0 || max_terms < 1) throw DomainError("projection needs power >= 0 and at least one term");
    WeightSpec w(f, m, a);
    ProjectionResiduals pr;
    pr.power = power;
    pr.degrees = DegreeSet(f, m).first(max_terms);
    const std::size_t n = pr.degrees.size();
    std::vector<RealPoly> basis;
    std::vector<double> norms;
    for (int d : pr.degrees) {
        basis.push_back(exceptional_at(f, m, d, a));
        norms.push_back(norm_closed_form(f, m, d, a));
    }
    auto full = integrate_half_line([&](double x) {
        double wx = w(x);
        double xj = std::pow(x, power);
        return wx == 0 ? 0.0 : xj * xj * wx;
    });
    const double total = full.value;

    // Expansion coefficients <x^j, p_k> / |p_k|^2; each moment is resolved
    // relative to the Cauchy-Schwarz bound |x^j| |p_k|.
    ToleranceScale bound = [&](const std::vector<double>&) {
        std::vector<double> s(n);
        for (std::size_t k = 0; k < n; ++k) s[k] = std::sqrt(total * norms[k]);
        return s;
    };
    auto moments = integrate_half_line(
        [&](double x, std::vector<double>& out) {
            double wx = w(x);
            double xj = std::pow(x, power);
            for (std::size_t k = 0; k < n; ++k) out[k] = wx == 0 ? 0.0 : xj * basis[k].eval(x) * wx;
        },
        n, {}, bound);
    std::vector<double> coef(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (!moments[k].converged) throw ToleranceNotMet("projection moment for degree " + std::to_string(pr.degrees[k]) + " did not converge (value " + std::to_string(moments[k].value) + ", error estimate " + std::to_string(moments[k].error_estimate) + ", scale " + std::to_string(std::sqrt(total * norms[k])) + ")");
        coef[k] = moments[k].value / norms[k];
    }

    // Residual norms for every truncation in one pass, resolved to an
    // absolute accuracy set by |x^j|^2.
    QuadratureOptions opt;
    opt.abs_tol = 1e-13 * total;
    auto res = integrate_half_line(
        [&](double x, std::vector<double>& out) {
            double wx = w(x);
            if (wx == 0) {
                std::fill(out.begin(), out.end(), 0.0);
                return;
            }
            double r = std::pow(x, power);
            for (std::size_t k = 0; k < n; ++k) {
                r -= coef[k] * basis[k].eval(x);
                out[k] = r * r * wx;
            }
        },
        n, opt);
    pr.non_increasing = true;
    for (std::size_t k = 0; k < n; ++k) {
        pr.residual.push_back(res[k].value);
        pr.error_estimate.push_back(res[k].error_estimate);
        // Differences below the requested absolute accuracy are not resolved.
        double slack = pr.error_estimate[k] + pr.error_estimate[k - (k > 0)] + opt.abs_tol;
        if (k > 0 && pr.residual[k] > pr.residual[k - 1] + slack)
            pr.non_increasing = false;
    }
    return pr;
}

} // namespace xlag
