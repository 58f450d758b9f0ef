#pragma once

#include "xlag/core/x_poly.hpp"

#include <string>

namespace xlag {

// Reduced quotient num/den of two XPoly. The common factor is removed over
// Q[a][x] and the denominator is scaled so that the rational leading
// coefficient of its leading x-coefficient is 1.
class RatFunc {
public:
    RatFunc() : den_(AlphaPoly(1)) {}
    RatFunc(const XPoly& p) : num_(p), den_(AlphaPoly(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const XPoly& num, const XPoly& den);

    const XPoly& num() const { return num_; }
    const XPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc diff() const;
    // Numerator/denominator evaluation at a concrete parameter and point.
    Rational eval(const Rational& a, const Rational& x) const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator/(const RatFunc& f, const RatFunc& g);
    friend bool operator==(const RatFunc& f, const RatFunc& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }
    friend bool operator!=(const RatFunc& f, const RatFunc& g) { return !(f == g); }

    std::string to_string() const;

private:
    void reduce();
    XPoly num_;
    XPoly den_;
};

} // namespace xlag
