#pragma once

#include <gmpxx.h>

#include <string>

namespace xlag {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// as long as every value passes through canonicalize(), which gmpxx does for
// all arithmetic results.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Exact conversion: every finite double is a dyadic rational.
Rational from_double(double v);

// Parses "p", "p/q", or a decimal literal such as "-0.25" exactly.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

} // namespace xlag
