#include "xlag/ode/darboux.hpp"

#include "xlag/classical/laguerre.hpp"
#include "xlag/core/error.hpp"

namespace xlag {

namespace {

RatFunc logd(const XPoly& p) { return RatFunc(p.diff(), p); }

RatFunc constant(const AlphaPoly& c) { return RatFunc(XPoly(c)); }

} // namespace

SeedFunction seed(int tag, int m) {
    if (m < 0) throw DegreeNotAdmissible("seed degree must be non-negative");
    const AlphaPoly a = AlphaPoly::param();
    const RatFunc minus_a_over_x(XPoly(-a), XPoly::x());
    switch (tag) {
    case 0: return {0, m, logd(laguerre(m, plus_alpha())), AlphaPoly(m)};
    case 1: return {1, m, RatFunc(XPoly(1)) + logd(laguerre_reflected(m, plus_alpha())), AlphaPoly::linear(-1, -1 - m)};
    case 2: return {2, m, minus_a_over_x + logd(laguerre(m, minus_alpha())), AlphaPoly::linear(-1, m)};
    case 3:
        return {3, m, minus_a_over_x + RatFunc(XPoly(1)) + logd(laguerre_reflected(m, minus_alpha())),
                AlphaPoly(-(m + 1))};
    default: throw DomainError("seed tag must be 0..3");
    }
}

bool seed_eigen_check(const SeedFunction& s) {
    const RatFunc x(XPoly::x());
    const RatFunc& u = s.log_derivative;
    RatFunc lhs = -x * (u.diff() + u * u) + (x - constant(AlphaPoly::linear(1, 1))) * u;
    return lhs == constant(s.eigenvalue);
}

ExpressionSpec darboux_partner(const SeedFunction& s, const RatFunc& gauge, const AlphaPoly& lambda) {
    if (gauge.is_zero()) throw DivisionByZeroPoly("factorization gauge must be nonzero");
    const RatFunc x(XPoly::x());
    const RatFunc inv_x(XPoly(1), XPoly::x());
    RatFunc bl = gauge.diff() / gauge;
    RatFunc q = constant(AlphaPoly::linear(1, 2)) - x - RatFunc(XPoly(2)) * x * bl;
    RatFunc w = -s.log_derivative + bl - (constant(AlphaPoly::linear(1, 1)) - x) * inv_x;
    RatFunc r = -x * (w.diff() + w * w) - q * w + constant(lambda);
    return {-x, -q, -r, AlphaPoly(), "partner of seed " + std::to_string(s.tag)};
}

PartnerComparison compare_expressions(const ExpressionSpec& partner, const ExpressionSpec& target) {
    PartnerComparison c;
    c.a2_equal = partner.a2 == target.a2;
    c.a1_equal = partner.a1 == target.a1;
    RatFunc diff = partner.a0 - target.a0;
    if (diff.is_polynomial() && diff.num().degree() <= 0 && diff.den().leading().is_constant()) {
        c.a0_constant_offset = true;
        c.a0_offset = diff.num().coeff(0);
        c.a0_offset *= Rational(1) / diff.den().leading().leading();
    }
    return c;
}

PartnerComparison darboux_family_check(Family f, int m) {
    const XPoly x = XPoly::x();
    switch (f) {
    case Family::TypeI: {
        SeedFunction s = seed(1, m);
        auto partner = darboux_partner(s, RatFunc(laguerre_reflected(m, plus_alpha())), s.eigenvalue);
        return compare_expressions(partner, expression_for(Family::TypeI, m).map_alpha(1, 1));
    }
    case Family::TypeII: {
        SeedFunction s = seed(2, m);
        auto partner = darboux_partner(s, RatFunc(x * laguerre(m, minus_alpha())), s.eigenvalue);
        return compare_expressions(partner, expression_for(Family::TypeII, m).map_alpha(1, -1));
    }
    case Family::TypeIII: {
        SeedFunction s = seed(3, m);
        auto partner = darboux_partner(s, RatFunc(x * laguerre_reflected(m, minus_alpha())), s.eigenvalue);
        return compare_expressions(partner, expression_for(Family::TypeIII, m).map_alpha(1, -1));
    }
    }
    throw DomainError("unknown family");
}

} // namespace xlag
