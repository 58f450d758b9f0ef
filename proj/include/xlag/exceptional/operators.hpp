#pragma once

#include "xlag/core/rat_func.hpp"
#include "xlag/exceptional/family.hpp"

#include <string>

namespace xlag {

// First-order ladder operators of each family at parameter b = a + shift.
//   Type I    A[y] = L_m^{b}(-x) y' - L_m^{b+1}(-x) y
//             B[y] = (x y' + (1+b) y) / L_m^{b}(-x)
//   Type II   A[y] = x L_m^{-b}(x) y' + (b-m) L_m^{-b-1}(x) y
//             B[y] = (y' - y) / L_m^{-b}(x)
//   Type III  A[y] = x L_m^{-b}(-x) y' - (m+1) L_{m+1}^{-b-1}(-x) y
//             B[y] = y' / L_m^{-b}(-x)
struct FirstOrderOp {
    enum class Variant { A, B };
    Family family;
    Variant variant;
    int m;
    int shift;

    std::string to_string() const;
};

// A returns a polynomial (den = 1); B generally a proper rational function.
RatFunc apply_first_order(const FirstOrderOp& op, const RatFunc& y);
RatFunc apply_first_order(const FirstOrderOp& op, const XPoly& y);

// Polynomial-output form: throws NotDivisible if B leaves a remainder.
XPoly apply_first_order_poly(const FirstOrderOp& op, const XPoly& y);

} // namespace xlag
