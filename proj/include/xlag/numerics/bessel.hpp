#pragma once

namespace xlag {

// J_a(x) for a > -1 and x >= 0: power series below x = 12, Hankel's
// asymptotic expansion above.
double bessel_j(double a, double x);

// The i-th positive zero of J_a (i >= 1), to about 1e-12 relative.
// McMahon's expansion supplies the starting point for Newton's method.
// Throws DomainError for a <= -1 or i < 1, ConvergenceFailure otherwise.
double bessel_zero(double a, int i);

} // namespace xlag
