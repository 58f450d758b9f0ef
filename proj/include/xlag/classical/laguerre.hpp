#pragma once

#include "xlag/core/alpha.hpp"
#include "xlag/core/x_poly.hpp"

#include <string>

namespace xlag {

// Laguerre parameter of the form sign * a + offset.
struct LaguerreIndex {
    int sign = 1;
    int offset = 0;

    LaguerreIndex shifted(int by) const { return {sign, offset + by}; }
    AlphaPoly value(const Alpha& al = {}) const { return al.affine(sign, offset); }
    std::string to_string() const;

    friend bool operator==(const LaguerreIndex&, const LaguerreIndex&) = default;
};

inline LaguerreIndex plus_alpha(int offset = 0) { return {1, offset}; }
inline LaguerreIndex minus_alpha(int offset = 0) { return {-1, offset}; }

// L_n with the given parameter, built by the three-term recurrence and
// memoized. Negative n yields the zero polynomial.
XPoly laguerre(int n, LaguerreIndex idx, const Alpha& al = {});

// L_n(-x)
XPoly laguerre_reflected(int n, LaguerreIndex idx, const Alpha& al = {});

// Drops every memoized polynomial; intended for tests and long sweeps.
void clear_laguerre_cache();

// Derivative identities: L_n' = -L_{n-1}^{(+1)}, (L_n(-x))' = L_{n-1}^{(+1)}(-x),
// and the reflected differential equation x y'' + (p+1+x) y' - n y = 0.
bool laguerre_derivative_identity_check(int n, LaguerreIndex idx);

// x L_n' = n L_n - (n+p) L_{n-1} and L_n = L_n^{(+1)} - L_{n-1}^{(+1)}.
bool laguerre_three_point_identities(int n, LaguerreIndex idx);

// Gamma(n+a+1)/n!, the squared norm for the weight x^a e^{-x}.
double classical_norm(int n, double a);

} // namespace xlag
