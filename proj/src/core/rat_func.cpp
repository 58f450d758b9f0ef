#include "xlag/core/rat_func.hpp"

#include "xlag/core/error.hpp"

namespace xlag {

RatFunc::RatFunc(const XPoly& num, const XPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZeroPoly("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = XPoly(AlphaPoly(1));
        return;
    }
    XPoly g = gcd(num_, den_);
    if (g.degree() > 0 || g.leading().degree() > 0) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    Rational s = den_.leading().leading();
    if (s != 1) {
        AlphaPoly inv(Rational(1) / s);
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc RatFunc::diff() const {
    return RatFunc(num_.diff() * den_ - num_ * den_.diff(), den_ * den_);
}

Rational RatFunc::eval(const Rational& a, const Rational& x) const {
    Rational d = den_.eval(a, x);
    if (d == 0) throw DivisionByZeroPoly("rational function evaluated at a pole");
    return num_.eval(a, x) / d;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
    if (f.den_ == g.den_) return RatFunc(f.num_ + g.num_, f.den_);
    return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
    return RatFunc(f.num_ * g.num_, f.den_ * g.den_);
}

RatFunc operator/(const RatFunc& f, const RatFunc& g) {
    if (g.is_zero()) throw DivisionByZeroPoly("division by the zero rational function");
    return RatFunc(f.num_ * g.den_, f.den_ * g.num_);
}

std::string RatFunc::to_string() const {
    if (is_polynomial() && den_.leading() == AlphaPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace xlag
