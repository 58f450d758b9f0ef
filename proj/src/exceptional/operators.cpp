#include "xlag/exceptional/operators.hpp"

#include "xlag/classical/laguerre.hpp"
#include "xlag/core/error.hpp"

namespace xlag {

namespace {

// op[y] = (c1 y' + c0 y) / den
struct Coeffs {
    XPoly c1;
    XPoly c0;
    XPoly den;
};

Coeffs coeffs_of(const FirstOrderOp& op) {
    const int m = op.m;
    const int s = op.shift;
    const XPoly x = XPoly::x();
    const bool is_a = op.variant == FirstOrderOp::Variant::A;
    switch (op.family) {
    case Family::TypeI: {
        XPoly eta = laguerre_reflected(m, plus_alpha(s));
        if (is_a) return {eta, -laguerre_reflected(m, plus_alpha(s + 1)), XPoly(1)};
        return {x, XPoly(AlphaPoly::linear(1, 1 + s)), eta};
    }
    case Family::TypeII: {
        XPoly eta = laguerre(m, minus_alpha(-s));
        if (is_a) return {x * eta, laguerre(m, minus_alpha(-s - 1)) * AlphaPoly::linear(1, s - m), XPoly(1)};
        return {XPoly(1), XPoly(-1), eta};
    }
    case Family::TypeIII: {
        XPoly eta = laguerre_reflected(m, minus_alpha(-s));
        if (is_a) return {x * eta, laguerre_reflected(m + 1, minus_alpha(-s - 1)) * AlphaPoly(-(m + 1)), XPoly(1)};
        return {XPoly(1), XPoly(), eta};
    }
    }
    throw DomainError("unknown family");
}

} // namespace

std::string FirstOrderOp::to_string() const {
    std::string v = variant == Variant::A ? "A" : "B";
    std::string p = "a";
    if (shift > 0) p += "+" + std::to_string(shift);
    if (shift < 0) p += std::to_string(shift);
    return v + "^{" + family_name(family) + "," + p + "}_" + std::to_string(m);
}

RatFunc apply_first_order(const FirstOrderOp& op, const RatFunc& y) {
    Coeffs c = coeffs_of(op);
    RatFunc body = RatFunc(c.c1) * y.diff() + RatFunc(c.c0) * y;
    return body / RatFunc(c.den);
}

RatFunc apply_first_order(const FirstOrderOp& op, const XPoly& y) {
    Coeffs c = coeffs_of(op);
    XPoly body = c.c1 * y.diff() + c.c0 * y;
    return RatFunc(body, c.den);
}

XPoly apply_first_order_poly(const FirstOrderOp& op, const XPoly& y) {
    Coeffs c = coeffs_of(op);
    XPoly body = c.c1 * y.diff() + c.c0 * y;
    return divide_exact(body, c.den);
}

} // namespace xlag
