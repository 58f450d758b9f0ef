#include "doctest.h"

#include "xlag/classical/laguerre.hpp"
#include "xlag/core/error.hpp"
#include "xlag/core/parse.hpp"
#include "xlag/exceptional/operators.hpp"
#include "xlag/exceptional/polynomials.hpp"

using namespace xlag;

namespace {

const XPoly x = XPoly::x();

XPoly P(const char* s) { return parse_xpoly(s); }

} // namespace

TEST_CASE("reference Type III table matches the constructor") {
    const auto& table = reference_type3_table();
    CHECK(table.size() == 15);
    for (const auto& e : table) {
        INFO("m=" << e.m << " n=" << e.n);
        CHECK(xlag3(e.m, e.n) == parse_xpoly(e.text));
    }
}

TEST_CASE("Type III spot values") {
    CHECK(xlag3(1, 2) == P("x^2 - 2a x + a(a+1)"));
    CHECK(xlag3(2, 3) == P("1/2 x^3 - 3(a-1)/2 x^2 + 3a(a-1)/2 x - a(a-1)(a+1)/2"));
    CHECK(xlag3(1, 0) == XPoly(1));
    // k = 1 collapses to (m+1) L_{m+1}^{-a-2}(-x).
    for (int m = 1; m <= 4; ++m) CHECK(xlag3(m, m + 1) == laguerre_reflected(m + 1, minus_alpha(-2)) * AlphaPoly(m + 1));
    CHECK_THROWS_AS(xlag3(2, 1), DegreeNotAdmissible);
    CHECK_THROWS_AS(xlag3(2, 2), DegreeNotAdmissible);
    CHECK_THROWS_AS(xlag3(1, -1), DegreeNotAdmissible);
}

TEST_CASE("alternative and integral representations") {
    CHECK(xlag3_alt(1, 2) == P("x^2 - 2a x + a(a+1)"));
    CHECK(xlag3_alt(3, 4) == parse_xpoly(reference_type3_table()[11].text));
    CHECK(xlag3_integral(1, 3) == P("-x^3 + 3(a+1)x^2 - 3a(a+2)x + a(a+1)(a+2)"));
    // Hand computation for m=1, k=1: 2 * int_0^x (t - a) dt + a(a+1).
    CHECK(xlag3_integral(1, 2) == P("x^2 - 2a x") + XPoly(xlag3_origin_value(1, 1)));
    CHECK(xlag3_origin_value(1, 1) == P("a(a+1)").coeff(0));
    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= 10; ++k) {
            INFO("m=" << m << " k=" << k);
            XPoly base = xlag3(m, m + k);
            CHECK(xlag3_alt(m, m + k) == base);
            CHECK(xlag3_integral(m, m + k) == base);
            CHECK(base.coeff(0) == xlag3_origin_value(m, k));
        }
}

TEST_CASE("Type I values") {
    CHECK(xlag1(1, 1) == P("1 + a + x"));
    // Hand expansion of L_1^a(-x) L_1^{a-1}(x) + L_1^{a-1}(-x) L_0^a(x).
    CHECK(xlag1(1, 2) == P("-x^2 + a(a+2)"));
    for (int m = 1; m <= 4; ++m) CHECK(xlag1(m, m) == laguerre_reflected(m, plus_alpha()));
    CHECK_THROWS_AS(xlag1(2, 1), DegreeNotAdmissible);
}

TEST_CASE("Type II values") {
    CHECK(xlag2(0, 1) == P("(a+2)(x-a-1)"));
    CHECK(xlag2(0, 0) == P("-(a+1)"));
    // Hand expansion: (1-a-1) L_1^{-a-2}(x) = -a(-a-1-x).
    CHECK(xlag2(1, 1) == P("a^2 + a + a x"));
    for (int n = 0; n <= 6; ++n) CHECK(xlag2(0, n) == laguerre(n, plus_alpha()) * AlphaPoly::linear(-1, -(n + 1)));
    CHECK_THROWS_AS(xlag2(3, 2), DegreeNotAdmissible);
}

TEST_CASE("degrees and admissibility") {
    for (Family f : {Family::TypeI, Family::TypeII, Family::TypeIII})
        for (int m = min_m(f); m <= 4; ++m) {
            DegreeSet ds(f, m);
            for (int n = 0; n <= m + 8; ++n) {
                if (ds.contains(n)) {
                    CHECK(exceptional(f, m, n).degree() == n);
                } else {
                    CHECK_THROWS_AS(exceptional(f, m, n), DegreeNotAdmissible);
                }
            }
            CHECK(ds.missing().size() == static_cast<std::size_t>(m));
        }
    CHECK(DegreeSet(Family::TypeIII, 2).first(4) == std::vector<int>{0, 3, 4, 5});
    CHECK(DegreeSet(Family::TypeI, 2).first(3) == std::vector<int>{2, 3, 4});
    CHECK_THROWS_AS(DegreeSet(Family::TypeI, 0), DegreeNotAdmissible);
}

TEST_CASE("first-order operators") {
    using V = FirstOrderOp::Variant;
    FirstOrderOp a3{Family::TypeIII, V::A, 1, 1};
    CHECK(apply_first_order_poly(a3, XPoly(1)) == -P("x^2 - 2a x + a(a+1)"));
    CHECK(apply_first_order_poly(a3, XPoly(1)) == laguerre_reflected(2, minus_alpha(-2)) * AlphaPoly(-2));
    FirstOrderOp b3{Family::TypeIII, V::B, 1, 1};
    CHECK(apply_first_order_poly(b3, xlag3(1, 2)) == XPoly(2));
    CHECK(apply_first_order(FirstOrderOp{Family::TypeIII, V::B, 1, 0}, XPoly(1)).is_zero());
    // B generally leaves a denominator behind.
    RatFunc r = apply_first_order(FirstOrderOp{Family::TypeI, V::B, 1, 0}, x);
    CHECK_FALSE(r.is_polynomial());
    CHECK_THROWS_AS(apply_first_order_poly(FirstOrderOp{Family::TypeI, V::B, 1, 0}, x), NotDivisible);
}

TEST_CASE("constructors agree with minus the A operator") {
    using V = FirstOrderOp::Variant;
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 6; ++k) {
            CHECK(xlag3(m, m + k) == -apply_first_order_poly({Family::TypeIII, V::A, m, 1}, laguerre(k - 1, plus_alpha(1))));
            CHECK(xlag1(m, m + k) == -apply_first_order_poly({Family::TypeI, V::A, m, -1}, laguerre(k, plus_alpha(-1))));
        }
    for (int m = 0; m <= 3; ++m)
        for (int k = 0; k <= 6; ++k)
            CHECK(xlag2(m, m + k) == -apply_first_order_poly({Family::TypeII, V::A, m, 1}, laguerre(k, plus_alpha(1))));
}

TEST_CASE("B of a Type III polynomial returns the lowered Laguerre factor") {
    using V = FirstOrderOp::Variant;
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 6; ++k)
            CHECK(apply_first_order_poly({Family::TypeIII, V::B, m, 1}, xlag3(m, m + k)) ==
                  laguerre(k - 1, plus_alpha(1)) * AlphaPoly(m + k));
}

TEST_CASE("derivative lemmas") {
    CHECK(lemma2_check(1, 1));
    CHECK(lemma2_check(2, 3));
    CHECK(lemma2_check(3, 4));
    CHECK(lemma1_check(1, 1));
    CHECK(lemma1_check(2, 2));
    CHECK(lemma1_check(1, 4));
    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= 10; ++k) {
            CHECK(lemma1_check(m, k));
            CHECK(lemma2_check(m, k));
        }
}

TEST_CASE("negativity at the origin") {
    CHECK(negativity_at_zero_check(1, 1, -0.5));
    CHECK(negativity_at_zero_check(2, 1, -0.5));
    CHECK(negativity_at_zero_check(1, 3, -0.25));
    // Hand values: a(a+1) = -1/4 and -a(a-1)(a+1)/2 = -3/16 at a = -1/2.
    CHECK(xlag3(1, 2).eval(make_rational(-1, 2), 0) == make_rational(-1, 4));
    CHECK(xlag3(2, 3).eval(make_rational(-1, 2), 0) == make_rational(-3, 16));
    CHECK_THROWS_AS(negativity_at_zero_check(1, 1, 0.5), DomainError);
    CHECK_THROWS_AS(negativity_at_zero_check(1, 1, -1.0), DomainError);
}

TEST_CASE("property: negativity across a parameter sweep") {
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 12; ++k)
            for (double a : {-0.95, -0.75, -0.5, -0.25, -0.05}) CHECK(negativity_at_zero_check(m, k, a));
}

TEST_CASE("pinned construction equals substitution") {
    Rational v = make_rational(-1, 3);
    for (Family f : {Family::TypeI, Family::TypeII, Family::TypeIII})
        for (int m = std::max(1, min_m(f)); m <= 3; ++m)
            for (int n : DegreeSet(f, m).first(5)) {
                XPoly sym = exceptional(f, m, n);
                XPoly pin = exceptional(f, m, n, Alpha::at(v));
                for (int j = 0; j <= n; ++j) CHECK(pin.coeff(j) == AlphaPoly(sym.coeff(j).eval(v)));
            }
}
