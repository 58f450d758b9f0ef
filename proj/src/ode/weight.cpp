#include "xlag/ode/weight.hpp"

#include "xlag/core/error.hpp"
#include "xlag/exceptional/polynomials.hpp"
#include "xlag/ode/expression.hpp"

#include <algorithm>
#include <cmath>

namespace xlag {

WeightSpec::WeightSpec(Family f, int m, double a) : family_(f), m_(m), a_(a) {
    require_alpha(f, m, a);
    Rational av = from_double(a);
    eta_ = substitute_alpha(weight_denominator_root(f, m, Alpha::at(av)), av);
}

double WeightSpec::rational_part(double x) const {
    double e = eta_.eval(x);
    return 1.0 / (e * e);
}

double WeightSpec::operator()(double x) const {
    if (!(x > 0.0)) throw DomainError("weight is defined for x > 0");
    return std::pow(x, a_) * std::exp(-x) * rational_part(x);
}

double weight_eval(Family f, int m, double a, double x) { return WeightSpec(f, m, a)(x); }

bool symmetric_form_check(Family f, int m, double a, const std::vector<double>& xs, const std::vector<XPoly>& ys) {
    WeightSpec w(f, m, a);
    Rational av = from_double(a);
    std::vector<XPoly> tests = ys;
    if (tests.empty()) {
        tests.emplace_back(1);
        for (int n : DegreeSet(f, m).first(4)) tests.push_back(exceptional(f, m, n));
    }
    ExpressionSpec e = expression_for(f, m);
    const RealPoly deta = w.eta().derivative();
    for (const auto& y : tests) {
        RealPoly yp = substitute_alpha(y, av);
        RealPoly y1 = yp.derivative();
        RealPoly y2 = y1.derivative();
        RatFunc expanded = apply_expression(e, RatFunc(y));
        for (double x : xs) {
            if (!(x > 0.0)) throw DomainError("symmetric form is checked on x > 0");
            double eta = w.eta().eval(x);
            double logd = deta.eval(x) / eta;
            double W = w(x);
            double P = x * W;
            double dP = P * ((a + 1.0) / x - 1.0 - 2.0 * logd);
            double q = 0.0;
            switch (f) {
            case Family::TypeI: q = W * (2.0 * a * logd - m); break;
            case Family::TypeII: q = W * (m - 2.0 * x * logd); break;
            case Family::TypeIII: q = W * (a - m); break;
            }
            double v = yp.eval(x), d1 = y1.eval(x), d2 = y2.eval(x);
            double sym = (-(dP * d1 + P * d2) + q * v) / W;
            double ref = expanded.eval(av, from_double(x)).get_d();
            double scale = std::max({std::abs(P * d2 / W), std::abs(dP * d1 / W), std::abs(q * v / W), 1e-300});
            if (std::abs(sym - ref) > 1e-10 * scale) return false;
        }
    }
    return true;
}

} // namespace xlag
