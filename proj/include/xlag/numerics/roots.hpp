#pragma once

#include "xlag/core/real_poly.hpp"

#include <complex>
#include <vector>

namespace xlag {

struct RootSet {
    std::vector<double> real;                  // increasing
    std::vector<std::complex<double>> complex;  // one entry per root, Im != 0
    // Every real root was bracketed by a sign change and the root count
    // matches the degree.
    bool certified = false;
    int iterations = 0;
};

// All roots of p. Eigen's companion-matrix eigenvalues seed a simultaneous
// Aberth-Ehrlich iteration carried out in extended precision on the exact
// coefficients; real roots are then confirmed by sign changes.
// Throws ConvergenceFailure if the iteration stalls or certification fails.
RootSet all_roots(const RealPoly& p, double tol = 1e-12);

// Just the real roots, increasing.
std::vector<double> real_roots(const RealPoly& p, double tol = 1e-12);

// Roots as double-precision companion eigenvalues, without refinement.
std::vector<std::complex<double>> companion_roots(const std::vector<double>& coeffs);

// Smallest root in (0, hi) found by an extended-precision scan with bisection;
// the absence of roots below it is confirmed with Descartes' rule on the
// transformed polynomial. Throws ConvergenceFailure if none is found.
double smallest_positive_root(const RealPoly& p, double hi, double step);

// The first `count` positive roots, increasing, by the same scan. Roots closer
// together than `step` can be missed; the caller picks the step.
std::vector<double> leading_positive_roots(const RealPoly& p, int count, double hi, double step);

// Upper bound on the number of roots in (lo, hi) by Descartes' rule of signs
// applied after mapping (lo, hi) onto (0, inf).
int descartes_bound(const RealPoly& p, double lo, double hi);

} // namespace xlag
