#pragma once

#include "xlag/core/real_poly.hpp"
#include "xlag/exceptional/family.hpp"
#include "xlag/numerics/quadrature.hpp"

#include <vector>

namespace xlag {

// The family's polynomial of degree n at a numeric parameter value; the
// double is converted exactly before substitution.
RealPoly exceptional_at(Family f, int m, int n, double a);

// int_0^inf f g W dx for the family's weight at parameter a.
// Throws ToleranceNotMet if the quadrature misses the tolerances.
QuadratureResult inner_product(Family f, int m, double a, const RealPoly& p, const RealPoly& q,
                               const QuadratureOptions& opt = {});

// Squared norm of the degree-n polynomial from the closed forms:
//   I    (a+n) G(a+n-m) / (n-m)!
//   II   (a+1+n-2m) G(a+2+n-m) / (n-m)!
//   III  n G(n-m+a+1) / (n-m-1)!, and G(a+1) G(-a) m! / G(m-a) for n = 0.
double norm_closed_form(Family f, int m, int n, double a);

struct GramReport {
    std::vector<int> degrees;
    std::vector<std::vector<double>> matrix;  // symmetric
    std::vector<double> closed_form;          // expected diagonal
    std::vector<double> diagonal_error;       // relative to closed_form
    double max_diagonal_error = 0;
    double max_off_diagonal = 0;  // max |G_ij| / sqrt(G_ii G_jj), i != j
    bool pass = false;            // both maxima below tol
};

// All pairwise inner products of the given degrees, computed in one
// vector-valued quadrature so that each polynomial is evaluated once per node.
// Throws DegreeNotAdmissible, DomainError, or ToleranceNotMet.
GramReport gram_matrix(Family f, int m, double a, const std::vector<int>& degrees, double tol = 1e-8,
                       const QuadratureOptions& opt = {});

} // namespace xlag
