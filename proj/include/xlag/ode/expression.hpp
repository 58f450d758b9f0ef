#pragma once

#include "xlag/core/rat_func.hpp"
#include "xlag/exceptional/family.hpp"

#include <optional>
#include <string>

namespace xlag {

// a2 y'' + a1 y' + a0 y together with the eigenvalue map n -> n + shift.
struct ExpressionSpec {
    RatFunc a2;
    RatFunc a1;
    RatFunc a0;
    AlphaPoly eigen_shift;
    std::string name;

    AlphaPoly eigenvalue(int n) const { return AlphaPoly(n) + eigen_shift; }
    // Least common multiple of the coefficient denominators.
    XPoly cleared_denominator() const;
    // Substitutes sign*a + offset for the parameter everywhere.
    ExpressionSpec map_alpha(int sign, const Rational& offset) const;
};

// -x y'' + (x - a - 1) y', eigenvalue n.
ExpressionSpec classical_expression();

// Exceptional expressions with eta the family's Laguerre factor:
//   Type I   eta = L_m^{a-1}(-x): a1 = x-a-1 + 2x eta'/eta, a0 = 2a eta'/eta - m
//   Type II  eta = L_m^{-a-1}(x):  a1 = x-a-1 + 2x eta'/eta, a0 = m - 2x eta'/eta
//   Type III eta = L_m^{-a-1}(-x): a1 = x-a-1 + 2x eta'/eta, a0 = a - m
// Eigenvalues n-m for Types I and II, n-m+a for Type III.
ExpressionSpec expression_for(Family f, int m);

RatFunc apply_expression(const ExpressionSpec& e, const RatFunc& y);
RatFunc apply_expression(const ExpressionSpec& e, const XPoly& p);

// D * (l[p] - lambda p) with D the cleared denominator, as a polynomial.
XPoly cleared_residual(const ExpressionSpec& e, const XPoly& p, const AlphaPoly& lambda);

// Residual for the family's own eigenpolynomial of degree n; zero when the
// eigen-equation holds.
XPoly eigen_residual(Family f, int m, int n);

// Conjugation by a power x^s: the expression y -> x^{-s} l[x^s y].
ExpressionSpec conjugate_by_power(const ExpressionSpec& e, const AlphaPoly& s);

struct FactorizationReport {
    bool lowering = false;  // -l^a = B A + c on the classical side
    bool raising = false;   // the exceptional expression from A B
    bool ok() const { return lowering && raising; }
};

// Checks both A/B compositions of the family on x^j, j = 0..max_degree.
FactorizationReport factorization_identity_report(Family f, int m, int max_degree);
bool factorization_identity_check(Family f, int m, int max_degree);

// x^a l_m^{I,a}[x^{-a} y] = l_m^{III,-a}[y] on x^j, j = 0..max_degree.
bool gauge_check(int m, int max_degree);

// l_m^{I,a}[x^{-a} q] = (n - m - a) x^{-a} q with q the Type III polynomial
// of degree n at parameter -a.
bool s_operator_eigen_check(int m, int n);

} // namespace xlag
