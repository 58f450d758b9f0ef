#pragma once

#include "xlag/core/x_poly.hpp"

#include <string>

namespace xlag {

// Parses a polynomial written in x and the parameter a, e.g.
// "1/2*x^4 - 2(a+2)x^3 + (a+3)(3a+2)x^2". Supports + - * ^, juxtaposition
// as multiplication, parentheses, rational literals, and division by
// nonzero constants. Throws DomainError on malformed input.
XPoly parse_xpoly(const std::string& text);

} // namespace xlag
