#include "xlag/exceptional/polynomials.hpp"

#include "xlag/classical/laguerre.hpp"
#include "xlag/core/error.hpp"

namespace xlag {

namespace {

const XPoly& xv() {
    static const XPoly x = XPoly::x();
    return x;
}

} // namespace

XPoly xlag1(int m, int n, const Alpha& al) {
    DegreeSet(Family::TypeI, m).require(n);
    const int k = n - m;
    return laguerre_reflected(m, plus_alpha(), al) * laguerre(k, plus_alpha(-1), al) +
           laguerre_reflected(m, plus_alpha(-1), al) * laguerre(k - 1, plus_alpha(), al);
}

XPoly xlag2(int m, int n, const Alpha& al) {
    DegreeSet(Family::TypeII, m).require(n);
    const int k = n - m;
    return xv() * laguerre(m, minus_alpha(-1), al) * laguerre(k - 1, plus_alpha(2), al) +
           laguerre(m, minus_alpha(-2), al) * laguerre(k, plus_alpha(1), al) * al.affine(-1, m - 1);
}

XPoly xlag3(int m, int n, const Alpha& al) {
    DegreeSet(Family::TypeIII, m).require(n);
    if (n == 0) return XPoly(1);
    const int k = n - m;
    return xv() * laguerre(k - 2, plus_alpha(2), al) * laguerre_reflected(m, minus_alpha(-1), al) +
           laguerre(k - 1, plus_alpha(1), al) * laguerre_reflected(m + 1, minus_alpha(-2), al) * AlphaPoly(m + 1);
}

XPoly xlag3_alt(int m, int n, const Alpha& al) {
    DegreeSet(Family::TypeIII, m).require(n);
    if (n == 0) throw DegreeNotAdmissible("the three-term representation needs n >= m+1");
    const int k = n - m;
    XPoly z = laguerre_reflected(m, minus_alpha(-1), al);
    XPoly lk1 = laguerre(k - 1, plus_alpha(1), al);
    return laguerre(k - 2, plus_alpha(1), al) * z * al.affine(1, k) +
           lk1 * laguerre_reflected(m + 1, minus_alpha(-1), al) * AlphaPoly(m + 1) - lk1 * z * AlphaPoly(m + k);
}

AlphaPoly xlag3_origin_value(int m, int k, const Alpha& al) {
    return binomial(al.affine(1, k), k - 1) * binomial(al.affine(-1, m - 1), m + 1) * AlphaPoly(m + 1);
}

XPoly xlag3_integral(int m, int n, const Alpha& al) {
    DegreeSet(Family::TypeIII, m).require(n);
    if (n == 0) throw DegreeNotAdmissible("the integral representation needs n >= m+1");
    const int k = n - m;
    XPoly integrand = laguerre(k - 1, plus_alpha(1), al) * laguerre_reflected(m, minus_alpha(-1), al);
    return integrand.antiderivative() * AlphaPoly(m + k) + XPoly(xlag3_origin_value(m, k, al));
}

XPoly exceptional(Family f, int m, int n, const Alpha& al) {
    switch (f) {
    case Family::TypeI: return xlag1(m, n, al);
    case Family::TypeII: return xlag2(m, n, al);
    case Family::TypeIII: return xlag3(m, n, al);
    }
    throw DomainError("unknown family");
}

XPoly weight_denominator_root(Family f, int m, const Alpha& al) {
    switch (f) {
    case Family::TypeI: return laguerre_reflected(m, plus_alpha(-1), al);
    case Family::TypeII: return laguerre(m, minus_alpha(-1), al);
    case Family::TypeIII: return laguerre_reflected(m, minus_alpha(-1), al);
    }
    throw DomainError("unknown family");
}

bool lemma1_check(int m, int k) {
    if (m < 1 || k < 1) throw DegreeNotAdmissible("lemma checks need m, k >= 1");
    const XPoly& x = xv();
    XPoly bracket = -x * laguerre(k - 3, plus_alpha(3)) +
                    (XPoly(AlphaPoly::linear(1, 2)) - x) * laguerre(k - 2, plus_alpha(2)) +
                    laguerre(k - 1, plus_alpha(1)) * AlphaPoly(m + 1);
    return xlag3(m, m + k).diff() == laguerre_reflected(m, minus_alpha(-1)) * bracket;
}

bool lemma2_check(int m, int k) {
    if (m < 1 || k < 1) throw DegreeNotAdmissible("lemma checks need m, k >= 1");
    XPoly rhs = laguerre(k - 1, plus_alpha(1)) * laguerre_reflected(m, minus_alpha(-1)) * AlphaPoly(m + k);
    return xlag3(m, m + k).diff() == rhs;
}

bool negativity_at_zero_check(int m, int k, double a) {
    if (!(a > -1.0 && a < 0.0)) throw DomainError("negativity at the origin needs -1 < a < 0");
    if (m < 1 || k < 1) throw DegreeNotAdmissible("negativity check needs m, k >= 1");
    Rational av = from_double(a);
    return xlag3(m, m + k, Alpha::at(av)).coeff(0).constant_term() < 0;
}

const std::vector<ReferenceEntry>& reference_type3_table() {
    static const std::vector<ReferenceEntry> table = {
        {1, 0, "1"},
        {1, 2, "x^2 - 2a x + a(a+1)"},
        {1, 3, "-x^3 + 3(a+1)x^2 - 3a(a+2)x + a(a+1)(a+2)"},
        {1, 4, "1/2 x^4 - 2(a+2)x^3 + (a+3)(3a+2)x^2 - 2a(a+2)(a+3)x + 1/2 a(a+1)(a+2)(a+3)"},
        {1, 5,
         "-1/6 x^5 + 5/6 (a+3)x^4 - 5/6 (a+4)(2a+3)x^3 + 5/6 (a+3)(a+4)(2a+1)x^2"
         " - 5/6 a(a+2)(a+3)(a+4)x + 1/6 a(a+1)(a+2)(a+3)(a+4)"},
        {2, 0, "1"},
        {2, 3, "1/2 x^3 - 3(a-1)/2 x^2 + 3a(a-1)/2 x - a(a-1)(a+1)/2"},
        {2, 4, "-1/2 x^4 + 2a x^3 - (a-1)(3a+4)x^2 + 2a(a-1)(a+2)x - a(a-1)(a+1)(a+2)/2"},
        {2, 5,
         "1/4 x^5 - 5(a+1)/4 x^4 + 5/2 (a^2+2a-1)x^3 - 5(a-1)(a+1)(a+3)/2 x^2"
         " + 5a(a-1)(a+2)(a+3)/4 x - a(a-1)(a+1)(a+2)(a+3)/4"},
        {2, 6,
         "-1/12 x^6 + (a+2)/2 x^5 - (5a^2+19a+6)/4 x^4 + (a+2)(a+4)(5a-3)/3 x^3"
         " - (a-1)(a+3)(a+4)(5a+4)/4 x^2 + a(a-1)(a+2)(a+3)(a+4)/2 x"
         " - a(a-1)(a+1)(a+2)(a+3)(a+4)/12"},
        {3, 0, "1"},
        {3, 4, "1/6 x^4 - 2(a-2)/3 x^3 + (a-1)(a-2)x^2 - 2a(a-1)(a-2)/3 x + a(a-2)(a-1)(a+1)/6"},
        {3, 5,
         "-1/6 x^5 + 5(a-1)/6 x^4 - 5(a-2)(2a+1)/6 x^3 + 5(a-2)(a-1)(2a+3)/6 x^2"
         " - 5a(a-2)(a-1)(a+2)/6 x + a(a-2)(a-1)(a+1)(a+2)/6"},
        {3, 6,
         "1/12 x^6 - a/2 x^5 + (5a^2+a-12)/4 x^4 - a(a-2)(5a+13)/3 x^3"
         " + (a-2)(a-1)(a+3)(5a+6)/4 x^2 - a(a-2)(a-1)(a+2)(a+3)/2 x"
         " + a(a-2)(a-1)(a+1)(a+2)(a+3)/12"},
        {3, 7,
         "-1/36 x^7 + 7(a+1)/36 x^6 - 7(a^2+2a-2)/12 x^5 + 35(a+1)(a^2+2a-6)/36 x^4"
         " - 7(a-2)(a+4)(5a^2+10a-3)/36 x^3 + 7(a-2)(a-1)(a+1)(a+3)(a+4)/12 x^2"
         " - 7a(a-2)(a-1)(a+2)(a+3)(a+4)/36 x + a(a-2)(a-1)(a+1)(a+2)(a+3)(a+4)/36"},
    };
    return table;
}

} // namespace xlag
