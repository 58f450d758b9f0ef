#pragma once

#include "xlag/core/alpha_poly.hpp"

#include <string>
#include <vector>

namespace xlag {

// Dense polynomial in x whose coefficients are polynomials in the parameter.
class XPoly {
public:
    XPoly() = default;
    XPoly(const AlphaPoly& c);  // NOLINT(google-explicit-constructor)
    XPoly(long c) : XPoly(AlphaPoly(c)) {}  // NOLINT(google-explicit-constructor)
    explicit XPoly(std::vector<AlphaPoly> coeffs);

    static XPoly x() { return monomial(1); }
    static XPoly monomial(int k, const AlphaPoly& c = AlphaPoly(1));

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial (stands in for minus infinity).
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<AlphaPoly>& coeffs() const { return c_; }
    AlphaPoly coeff(int k) const;
    AlphaPoly leading() const;
    // Largest degree in the parameter over all coefficients.
    int alpha_degree() const;

    XPoly diff() const;
    XPoly reflect() const;  // p(-x)
    XPoly antiderivative() const;  // vanishes at x = 0
    XPoly map_alpha(int sign, const Rational& offset) const;
    XPoly shift_up(int k) const;  // x^k * p

    AlphaPoly eval_x(const Rational& x) const;
    Rational eval(const Rational& a, const Rational& x) const;

    // gcd of the coefficients, monic in the parameter; zero for p = 0.
    AlphaPoly content() const;
    XPoly primitive() const;

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    XPoly& operator*=(const XPoly& o);
    XPoly& operator*=(const AlphaPoly& s);

    friend XPoly operator+(XPoly p, const XPoly& q) { return p += q; }
    friend XPoly operator-(XPoly p, const XPoly& q) { return p -= q; }
    friend XPoly operator*(const XPoly& p, const XPoly& q);
    friend XPoly operator*(XPoly p, const AlphaPoly& s) { return p *= s; }
    friend XPoly operator*(const AlphaPoly& s, XPoly p) { return p *= s; }
    friend bool operator==(const XPoly& p, const XPoly& q) { return p.c_ == q.c_; }
    friend bool operator!=(const XPoly& p, const XPoly& q) { return !(p == q); }

    // e.g. "x^2 - 2*a*x + a*(a+1)"
    std::string to_string() const;

private:
    void trim();
    std::vector<AlphaPoly> c_;
};

struct PseudoDivision {
    XPoly quot;
    XPoly rem;
    AlphaPoly scale;  // scale * num == quot * den + rem
};

PseudoDivision pseudo_divide(const XPoly& num, const XPoly& den);

// q with num == q * den exactly; NotDivisible otherwise.
XPoly divide_exact(const XPoly& num, const XPoly& den);
XPoly divide_exact(const XPoly& num, const AlphaPoly& den);

// Greatest common divisor over Q[a][x], normalized: leading parameter
// coefficient of the leading x-coefficient equals 1.
XPoly gcd(const XPoly& p, const XPoly& q);

XPoly normalize_leading(const XPoly& p);

} // namespace xlag
