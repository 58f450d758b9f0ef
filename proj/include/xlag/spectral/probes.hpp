#pragma once

#include "xlag/core/real_poly.hpp"
#include "xlag/exceptional/family.hpp"
#include "xlag/spectral/classification.hpp"

#include <functional>
#include <vector>

namespace xlag {

// A function on (0, inf) with its derivative, for boundary probes that need
// non-polynomial inputs such as x^{-a}.
struct SmoothFunction {
    std::function<double(double)> value;
    std::function<double(double)> derivative;

    static SmoothFunction polynomial(const RealPoly& p);
    // x^s p(x).
    static SmoothFunction power_times(double s, const RealPoly& p);
    static SmoothFunction power(double s);
};

// Integrability of x^{2s} W near the origin. The verdict comes from the local
// exponent 2s + a against -1; the decade-by-decade integrals on (eps, x*)
// corroborate it: their ratio stays below 1 exactly when they sum.
struct L2Probe {
    double exponent = 0;
    bool integrable = false;
    std::vector<double> decade_integrals;  // over (x*/100^{k+1}, x*/100^k)
    bool numeric_integrable = false;
    bool agrees = false;
};
L2Probe l2_membership_probe(Family f, int m, double a, double s, double x_star = 1.0);

// [f, g](x) = x^{a+1} e^{-x} / eta(x)^2 (f g' - f' g) for real f, g.
double sesquilinear_form(Family f, int m, double a, const SmoothFunction& u, const SmoothFunction& v, double x);

struct LimitEstimate {
    std::vector<double> xs;
    std::vector<double> samples;
    double limit = 0;
    double scale = 1;  // max(|f|, |f'|) on [0.1, 1]
    bool vanishes = false;
};

// Limit at the origin of the boundary expression for the given condition,
// from samples on the geometric grid 1e-2, 1e-3, ..., 1e-10 accelerated by
// repeated Aitken extrapolation. vanishes iff |limit| < 1e-8 * scale.
LimitEstimate boundary_functional(BoundaryKind kind, double a, const SmoothFunction& f);

// Same extrapolation applied to [u, v](x) as x -> 0+.
LimitEstimate sesquilinear_limit_at_zero(Family f, int m, double a, const SmoothFunction& u,
                                         const SmoothFunction& v);

// Reduction of order from the lowest eigenpolynomial y1 (degree m for Types I
// and II, the constant for Type III): y2 = y1 int_1^x dt / (t W(t) y1(t)^2).
// |y2|^2 W must increase at every point and by at least exp(dx/2) over the
// last step, while |y1|^2 W decays.
struct GrowthProbe {
    std::vector<double> xs;
    std::vector<double> second_weighted;
    std::vector<double> first_weighted;
    bool second_grows = false;
    bool first_bounded = false;
    bool pass = false;
};
GrowthProbe second_solution_growth_probe(Family f, int m, double a, const std::vector<double>& xs);

// Weighted L2 distance squared from x^j to its projection on the first n
// eigenfunctions of the family, for n = 1 .. max_terms, each obtained by
// quadrature of the residual itself.
struct ProjectionResiduals {
    int power = 0;
    std::vector<int> degrees;
    std::vector<double> residual;
    std::vector<double> error_estimate;
    bool non_increasing = false;  // within the quadrature error
};
ProjectionResiduals projection_residuals(Family f, int m, double a, int power, int max_terms);

} // namespace xlag
