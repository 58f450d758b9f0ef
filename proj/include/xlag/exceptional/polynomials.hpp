#pragma once

#include "xlag/core/alpha.hpp"
#include "xlag/core/x_poly.hpp"
#include "xlag/exceptional/family.hpp"

#include <string>
#include <vector>

namespace xlag {

// Type I, degree n >= m >= 1:
//   L_m^{a}(-x) L_{n-m}^{a-1}(x) + L_m^{a-1}(-x) L_{n-m-1}^{a}(x)
XPoly xlag1(int m, int n, const Alpha& al = {});

// Type II, degree n >= m >= 0:
//   x L_m^{-a-1}(x) L_{n-m-1}^{a+2}(x) + (m-a-1) L_m^{-a-2}(x) L_{n-m}^{a+1}(x)
XPoly xlag2(int m, int n, const Alpha& al = {});

// Type III, degree 0 (the constant 1) or n >= m+1 with k = n - m:
//   x L_{k-2}^{a+2}(x) L_m^{-a-1}(-x) + (m+1) L_{k-1}^{a+1}(x) L_{m+1}^{-a-2}(-x)
XPoly xlag3(int m, int n, const Alpha& al = {});

// Type III through the three-term representation
//   (k+a) L_{k-2}^{a+1}(x) L_m^{-a-1}(-x) + (m+1) L_{k-1}^{a+1}(x) L_{m+1}^{-a-1}(-x)
//   - (m+k) L_{k-1}^{a+1}(x) L_m^{-a-1}(-x).
XPoly xlag3_alt(int m, int n, const Alpha& al = {});

// Type III as an antiderivative plus its value at the origin:
//   (m+k) int_0^x L_{k-1}^{a+1}(t) L_m^{-a-1}(-t) dt + (m+1) C(k+a, k-1) C(m-a-1, m+1)
XPoly xlag3_integral(int m, int n, const Alpha& al = {});

// The value of xlag3_integral at x = 0, as a parameter polynomial.
AlphaPoly xlag3_origin_value(int m, int k, const Alpha& al = {});

// Dispatch on the family.
XPoly exceptional(Family f, int m, int n, const Alpha& al = {});

// The Laguerre factor whose square divides the weight:
// L_m^{a-1}(-x), L_m^{-a-1}(x), L_m^{-a-1}(-x) for Types I, II, III.
XPoly weight_denominator_root(Family f, int m, const Alpha& al = {});

// The m-dependent derivative identity
//   (L_{m,m+k})' = L_m^{-a-1}(-x) [ -x L_{k-3}^{a+3} + (a+2-x) L_{k-2}^{a+2} + (m+1) L_{k-1}^{a+1} ].
bool lemma1_check(int m, int k);

// (L_{m,m+k})' = (m+k) L_{k-1}^{a+1}(x) L_m^{-a-1}(-x).
bool lemma2_check(int m, int k);

// The Type III polynomial of degree m+k is negative at the origin for a in (-1,0).
bool negativity_at_zero_check(int m, int k, double a);

// Reference Type III table for m = 1, 2, 3, written as parseable text.
struct ReferenceEntry {
    int m;
    int n;
    std::string text;
};
const std::vector<ReferenceEntry>& reference_type3_table();

} // namespace xlag
