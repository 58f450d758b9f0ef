#include "xlag/ode/expression.hpp"

#include "xlag/classical/laguerre.hpp"
#include "xlag/core/error.hpp"
#include "xlag/exceptional/operators.hpp"
#include "xlag/exceptional/polynomials.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace xlag {

namespace {

XPoly lcm(const XPoly& p, const XPoly& q) { return divide_exact(p * q, gcd(p, q)); }

RatFunc map_rat(const RatFunc& f, int sign, const Rational& offset) {
    return RatFunc(f.num().map_alpha(sign, offset), f.den().map_alpha(sign, offset));
}

ExpressionSpec build(Family f, int m) {
    const XPoly x = XPoly::x();
    const AlphaPoly a = AlphaPoly::param();
    XPoly eta = weight_denominator_root(f, m);
    RatFunc log_d(eta.diff(), eta);
    RatFunc a1 = RatFunc(x - XPoly(a + AlphaPoly(1))) + RatFunc(XPoly(2) * x) * log_d;
    RatFunc a0;
    AlphaPoly shift;
    switch (f) {
    case Family::TypeI:
        a0 = RatFunc(XPoly(AlphaPoly(2) * a)) * log_d - RatFunc(XPoly(m));
        shift = AlphaPoly(-m);
        break;
    case Family::TypeII:
        a0 = RatFunc(XPoly(m)) - RatFunc(XPoly(2) * x) * log_d;
        shift = AlphaPoly(-m);
        break;
    case Family::TypeIII:
        a0 = RatFunc(XPoly(a - AlphaPoly(m)));
        shift = a - AlphaPoly(m);
        break;
    }
    return {RatFunc(-x), a1, a0, shift, "l^{" + family_name(f) + "}_" + std::to_string(m)};
}

} // namespace

XPoly ExpressionSpec::cleared_denominator() const { return lcm(lcm(a2.den(), a1.den()), a0.den()); }

ExpressionSpec ExpressionSpec::map_alpha(int sign, const Rational& offset) const {
    return {map_rat(a2, sign, offset), map_rat(a1, sign, offset), map_rat(a0, sign, offset),
            eigen_shift.compose_linear(sign, offset), name};
}

ExpressionSpec classical_expression() {
    const XPoly x = XPoly::x();
    return {RatFunc(-x), RatFunc(x - XPoly(AlphaPoly::linear(1, 1))), RatFunc(), AlphaPoly(), "l"};
}

ExpressionSpec expression_for(Family f, int m) {
    if (m < min_m(f)) throw DegreeNotAdmissible("Type " + family_name(f) + " needs m >= " + std::to_string(min_m(f)));
    static std::mutex mu;
    static std::map<std::pair<Family, int>, ExpressionSpec> memo;
    std::lock_guard lock(mu);
    auto it = memo.find({f, m});
    if (it != memo.end()) return it->second;
    return memo.emplace(std::make_pair(f, m), build(f, m)).first->second;
}

RatFunc apply_expression(const ExpressionSpec& e, const RatFunc& y) {
    RatFunc d1 = y.diff();
    return e.a2 * d1.diff() + e.a1 * d1 + e.a0 * y;
}

RatFunc apply_expression(const ExpressionSpec& e, const XPoly& p) {
    XPoly d = e.cleared_denominator();
    return RatFunc(cleared_residual(e, p, AlphaPoly()), d);
}

XPoly cleared_residual(const ExpressionSpec& e, const XPoly& p, const AlphaPoly& lambda) {
    XPoly d = e.cleared_denominator();
    auto scaled = [&d](const RatFunc& c) { return c.num() * divide_exact(d, c.den()); };
    XPoly d1 = p.diff();
    return scaled(e.a2) * d1.diff() + scaled(e.a1) * d1 + scaled(e.a0) * p - d * p * lambda;
}

XPoly eigen_residual(Family f, int m, int n) {
    DegreeSet(f, m).require(n);
    ExpressionSpec e = expression_for(f, m);
    return cleared_residual(e, exceptional(f, m, n), e.eigenvalue(n));
}

ExpressionSpec conjugate_by_power(const ExpressionSpec& e, const AlphaPoly& s) {
    // l[x^s y] = x^s ( a2 y'' + (a1 + 2 s a2/x) y' + (a0 + s a1/x + s(s-1) a2/x^2) y )
    const RatFunc inv_x(XPoly(1), XPoly::x());
    const RatFunc sr{XPoly(s)};
    const RatFunc ss1{XPoly(s * (s - AlphaPoly(1)))};
    RatFunc a1 = e.a1 + RatFunc(XPoly(2)) * sr * e.a2 * inv_x;
    RatFunc a0 = e.a0 + sr * e.a1 * inv_x + ss1 * e.a2 * inv_x * inv_x;
    return {e.a2, a1, a0, e.eigen_shift, e.name + " conjugated"};
}

FactorizationReport factorization_identity_report(Family f, int m, int max_degree) {
    using V = FirstOrderOp::Variant;
    if (max_degree < 0) throw DomainError("max_degree must be non-negative");
    const AlphaPoly a = AlphaPoly::param();
    ExpressionSpec cl = classical_expression();
    ExpressionSpec ex = expression_for(f, m);

    // Lowering side: -l^a = B^{a} A^{a} + c1.
    // Raising side: l_m = -(A^{a+t} B^{a+t} + c2).
    int t = 0;
    AlphaPoly c1, c2;
    switch (f) {
    case Family::TypeI:
        t = -1;
        c1 = a + AlphaPoly(m + 1);
        c2 = a + AlphaPoly(m);
        break;
    case Family::TypeII:
        t = 1;
        c1 = a - AlphaPoly(m);
        c2 = a + AlphaPoly(1 - m);
        break;
    case Family::TypeIII:
        t = 1;
        c1 = AlphaPoly(m + 1);
        c2 = AlphaPoly(m) - a;
        break;
    }
    FirstOrderOp A0{f, V::A, m, 0}, B0{f, V::B, m, 0}, At{f, V::A, m, t}, Bt{f, V::B, m, t};

    FactorizationReport rep{true, true};
    for (int j = 0; j <= max_degree; ++j) {
        XPoly y = XPoly::monomial(j);
        RatFunc lhs1 = -apply_expression(cl, RatFunc(y));
        RatFunc rhs1 = apply_first_order(B0, apply_first_order(A0, y)) + RatFunc(y * c1);
        if (lhs1 != rhs1) rep.lowering = false;

        RatFunc lhs2 = apply_expression(ex, RatFunc(y));
        RatFunc rhs2 = -(apply_first_order(At, apply_first_order(Bt, y)) + RatFunc(y * c2));
        if (lhs2 != rhs2) rep.raising = false;
    }
    return rep;
}

bool factorization_identity_check(Family f, int m, int max_degree) {
    return factorization_identity_report(f, m, max_degree).ok();
}

bool gauge_check(int m, int max_degree) {
    ExpressionSpec conj = conjugate_by_power(expression_for(Family::TypeI, m), AlphaPoly::linear(-1, 0));
    ExpressionSpec target = expression_for(Family::TypeIII, m).map_alpha(-1, 0);
    for (int j = 0; j <= max_degree; ++j) {
        RatFunc y(XPoly::monomial(j));
        if (apply_expression(conj, y) != apply_expression(target, y)) return false;
    }
    return true;
}

bool s_operator_eigen_check(int m, int n) {
    DegreeSet(Family::TypeIII, m).require(n);
    ExpressionSpec conj = conjugate_by_power(expression_for(Family::TypeI, m), AlphaPoly::linear(-1, 0));
    XPoly q = xlag3(m, n).map_alpha(-1, 0);
    AlphaPoly lambda = AlphaPoly::linear(-1, n - m);
    return cleared_residual(conj, q, lambda).is_zero();
}

} // namespace xlag
