#pragma once

#include "xlag/core/real_poly.hpp"
#include "xlag/exceptional/family.hpp"

#include <vector>

namespace xlag {

// W(x) = x^a e^{-x} / eta(x)^2 at a fixed admissible parameter, with eta the
// family's Laguerre factor. Construction validates the parameter range.
class WeightSpec {
public:
    WeightSpec(Family f, int m, double a);

    Family family() const { return family_; }
    int m() const { return m_; }
    double a() const { return a_; }
    const RealPoly& eta() const { return eta_; }

    double operator()(double x) const;
    // The polynomial part 1/eta^2, without the x^a e^{-x} factor.
    double rational_part(double x) const;

private:
    Family family_;
    int m_;
    double a_;
    RealPoly eta_;
};

// Throws DomainError for x <= 0 or an inadmissible parameter.
double weight_eval(Family f, int m, double a, double x);

// Compares the Lagrangian symmetric form
//   (1/W) ( -(x^{a+1} e^{-x} eta^{-2} y')' + Q y ),
// with Q the family's zero-order term written in terms of W, against the
// expanded expression at each point, for each test polynomial (relative
// tolerance 1e-10). The test polynomials default to 1 and the first few
// eigenpolynomials of the family.
bool symmetric_form_check(Family f, int m, double a, const std::vector<double>& xs,
                          const std::vector<XPoly>& ys = {});

} // namespace xlag
