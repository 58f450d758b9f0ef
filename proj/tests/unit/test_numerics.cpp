#include "doctest.h"

#include "support/gen.hpp"

#include "xlag/classical/laguerre.hpp"
#include "xlag/core/error.hpp"
#include "xlag/core/parse.hpp"
#include "xlag/exceptional/polynomials.hpp"
#include "xlag/numerics/bessel.hpp"
#include "xlag/numerics/interlacing.hpp"
#include "xlag/numerics/orthogonality.hpp"
#include "xlag/numerics/quadrature.hpp"
#include "xlag/numerics/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace xlag;

namespace {

const double pi = std::numbers::pi;
const double sqrt_pi = std::sqrt(pi);

RealPoly R(const char* text, double a = 0) { return substitute_alpha(parse_xpoly(text), a); }

// Independent J_a: plain series in long double.
long double series_j(long double a, long double x) {
    long double sum = 0, h = x / 2;
    for (int k = 0; k < 120; ++k) {
        long double t = std::pow(h, 2 * k + a) / (std::tgamma(k + 1.0L) * std::tgamma(k + a + 1.0L));
        sum += (k % 2 ? -t : t);
    }
    return sum;
}

// The i-th zero by a coarse sign scan and bisection on the series.
double oracle_zero(double a, int i) {
    long double x = 0.05, step = 0.05;
    long double f0 = series_j(a, x);
    int found = 0;
    while (true) {
        long double y = x + step, f1 = series_j(a, y);
        if ((f0 < 0) != (f1 < 0) && ++found == i) {
            long double lo = x, hi = y;
            for (int it = 0; it < 100; ++it) {
                long double mid = (lo + hi) / 2;
                if ((series_j(a, mid) < 0) == (f0 < 0))
                    lo = mid;
                else
                    hi = mid;
            }
            return static_cast<double>((lo + hi) / 2);
        }
        x = y;
        f0 = f1;
    }
}

} // namespace

TEST_CASE("real roots") {
    auto r = real_roots(R("x^2 + x - 1/4"));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == doctest::Approx(-0.5 - std::sqrt(2.0) / 2).epsilon(1e-10));
    CHECK(r[1] == doctest::Approx(-0.5 + std::sqrt(2.0) / 2).epsilon(1e-10));
    CHECK(r[0] == doctest::Approx(-1.20711).epsilon(1e-5));

    auto lin = real_roots(R("x - a", -0.5));
    REQUIRE(lin.size() == 1);
    CHECK(lin[0] == -0.5);

    auto cubic = real_roots(R("(x-1)(x-2)(x-3)"));
    REQUIRE(cubic.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(cubic[i] == doctest::Approx(i + 1).epsilon(1e-12));

    auto mixed = all_roots(R("(x^2 + 1)(x - 2)"));
    CHECK(mixed.real.size() == 1);
    CHECK(mixed.complex.size() == 2);
    CHECK(mixed.certified);
    CHECK_THROWS_AS(real_roots(R("3")), DomainError);
}

TEST_CASE("property: roots of products of distinct linear factors") {
    gen::Source g(31);
    for (int trial = 0; trial < 40; ++trial) {
        int d = g.integer(1, 12);
        std::vector<Rational> want;
        while (static_cast<int>(want.size()) < d) {
            Rational r = g.rational(20, 7);
            if (std::find(want.begin(), want.end(), r) == want.end()) want.push_back(r);
        }
        XPoly p(1);
        for (const auto& r : want) p = p * (XPoly::x() - XPoly(AlphaPoly(r)));
        auto got = real_roots(substitute_alpha(p, Rational(0)));
        std::sort(want.begin(), want.end());
        REQUIRE(got.size() == want.size());
        for (int i = 0; i < d; ++i) CHECK(got[i] == doctest::Approx(want[i].get_d()).epsilon(1e-12));
    }
}

TEST_CASE("high degree roots stay real and certified") {
    Rational a(-1, 2);
    auto rs = all_roots(substitute_alpha(xlag3(1, 41, Alpha::at(a)), a));
    CHECK(rs.certified);
    CHECK(rs.real.size() == 41);
    CHECK(rs.complex.empty());
}

TEST_CASE("positive root scan") {
    auto p = R("(x - 1/3)(x - 2)(x + 5)");
    CHECK(smallest_positive_root(p, 10, 0.01) == doctest::Approx(1.0 / 3).epsilon(1e-14));
    auto two = leading_positive_roots(p, 2, 10, 0.01);
    CHECK(two[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(descartes_bound(p, 0.0, 0.3) == 0);
    CHECK(descartes_bound(p, 0.0, 3.0) == 2);
    CHECK_THROWS_AS(leading_positive_roots(p, 3, 10, 0.01), ConvergenceFailure);
}

TEST_CASE("Bessel zeros") {
    CHECK(bessel_zero(0, 1) == doctest::Approx(2.404825558).epsilon(1e-9));
    CHECK(bessel_zero(0.5, 1) == doctest::Approx(pi).epsilon(1e-12));
    CHECK(bessel_zero(0.5, 2) == doctest::Approx(2 * pi).epsilon(1e-12));
    CHECK(bessel_j(0.5, 20.0) == doctest::Approx(std::sqrt(2 / (pi * 20)) * std::sin(20.0)).epsilon(1e-12));
    CHECK_THROWS_AS(bessel_zero(-1, 1), DomainError);
    CHECK_THROWS_AS(bessel_zero(0, 0), DomainError);
}

TEST_CASE("property: Bessel zeros against a series and bisection oracle") {
    for (double a : {0.0, 0.5, 1.5})
        for (int i = 1; i <= 5; ++i) {
            CAPTURE(a);
            CAPTURE(i);
            CHECK(std::abs(bessel_zero(a, i) - oracle_zero(a, i)) <= 1e-9 * oracle_zero(a, i));
        }
}

TEST_CASE("quadrature on known integrals") {
    auto r = integrate_half_line([](double x) { return std::pow(x, -0.75) * std::exp(-x); });
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(std::tgamma(0.25)).epsilon(1e-10));
    CHECK(r.error_estimate >= 0);
    auto s = integrate_from_zero([](double x) { return std::log(x); }, 1.0);
    CHECK(s.value == doctest::Approx(-1.0).epsilon(1e-10));
    auto t = integrate_interval([](double x) { return std::sin(x); }, 0.0, pi);
    CHECK(t.value == doctest::Approx(2.0).epsilon(1e-12));
    auto z = integrate_half_line([](double) { return 0.0; });
    CHECK(z.value == 0.0);
    CHECK(z.converged);
}

TEST_CASE("property: the error estimate follows the requested tolerance") {
    gen::Source g(5);
    for (int trial = 0; trial < 10; ++trial) {
        double a = g.real(-0.9, 2.0), b = g.real(0.2, 3.0);
        auto f = [=](double x) { return std::pow(x, a) * std::exp(-b * x) * (1 + x * x); };
        double prev = INFINITY;
        for (int k = 0; k < 8; ++k) {
            QuadratureOptions opt;
            opt.abs_tol = 1e-4 / std::pow(2.0, k);
            opt.rel_tol = opt.abs_tol;
            auto r = integrate_half_line(f, opt);
            CHECK(r.converged);
            CHECK(r.error_estimate <= std::max(opt.abs_tol, opt.rel_tol * std::abs(r.value)));
            CHECK(r.error_estimate <= prev);
            prev = r.error_estimate;
            double exact = (std::tgamma(a + 1) / std::pow(b, a + 1) + std::tgamma(a + 3) / std::pow(b, a + 3));
            CHECK(std::abs(r.value - exact) <= 10 * std::max(opt.abs_tol, opt.rel_tol * exact));
        }
    }
}

TEST_CASE("inner products") {
    auto one = exceptional_at(Family::TypeIII, 1, 0, -0.5);
    auto p2 = exceptional_at(Family::TypeIII, 1, 2, -0.5);
    auto n11 = inner_product(Family::TypeIII, 1, -0.5, one, one);
    CHECK(n11.value == doctest::Approx(2 * sqrt_pi).epsilon(1e-10));
    CHECK(n11.value == doctest::Approx(3.5449077).epsilon(1e-7));
    auto n22 = inner_product(Family::TypeIII, 1, -0.5, p2, p2);
    auto o = inner_product(Family::TypeIII, 1, -0.5, one, p2);
    CHECK(std::abs(o.value) < 1e-8 * std::sqrt(n11.value * n22.value));
    CHECK(inner_product(Family::TypeIII, 1, -0.5, RealPoly(), RealPoly()).value == 0.0);
    CHECK_THROWS_AS(inner_product(Family::TypeIII, 1, 0.5, one, one), DomainError);
}

TEST_CASE("closed-form norms") {
    CHECK(norm_closed_form(Family::TypeIII, 1, 2, -0.5) == doctest::Approx(sqrt_pi).epsilon(1e-13));
    CHECK(norm_closed_form(Family::TypeIII, 1, 2, -0.5) == doctest::Approx(1.7724539).epsilon(1e-7));
    CHECK(norm_closed_form(Family::TypeI, 1, 1, 1.0) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(norm_closed_form(Family::TypeIII, 1, 0, -0.5) == doctest::Approx(2 * sqrt_pi).epsilon(1e-13));
    CHECK_THROWS_AS(norm_closed_form(Family::TypeIII, 2, 1, -0.5), DegreeNotAdmissible);
    CHECK_THROWS_AS(norm_closed_form(Family::TypeI, 1, 1, -0.5), DomainError);
}

TEST_CASE("Gram matrices") {
    auto g = gram_matrix(Family::TypeIII, 1, -0.5, {0, 2, 3, 4});
    std::vector<double> want{2 * sqrt_pi, sqrt_pi, 3 * std::tgamma(2.5), 4 * std::tgamma(3.5) / 2};
    for (int i = 0; i < 4; ++i) CHECK(g.matrix[i][i] == doctest::Approx(want[i]).epsilon(1e-9));
    CHECK(g.pass);
    CHECK(g.max_off_diagonal < 1e-8);

    auto single = gram_matrix(Family::TypeIII, 2, -0.25, {4});
    CHECK(single.matrix.size() == 1);
    CHECK(single.max_off_diagonal == 0.0);

    auto t1 = gram_matrix(Family::TypeI, 1, 0.5, {1, 2, 3});
    for (int i = 0; i < 3; ++i) {
        int n = i + 1;
        CHECK(t1.matrix[i][i] == doctest::Approx((0.5 + n) * std::tgamma(0.5 + n - 1) / std::tgamma(n)).epsilon(1e-9));
    }
    CHECK(t1.pass);
}

TEST_CASE("property: Gram diagonal matches the closed form on the grids") {
    for (Family f : {Family::TypeI, Family::TypeII, Family::TypeIII})
        for (int m = std::max(1, min_m(f)); m <= 3; ++m) {
            std::vector<double> as;
            if (f == Family::TypeIII)
                as = {-0.75, -0.5, -0.25};
            else if (f == Family::TypeI)
                as = {0.5, 1.5};
            else
                as = {m - 0.5, m + 0.5};
            for (double a : as) {
                auto g = gram_matrix(f, m, a, DegreeSet(f, m).up_to(m + 8));
                CAPTURE(family_name(f));
                CAPTURE(m);
                CAPTURE(a);
                CHECK(g.max_diagonal_error < 1e-8);
                CHECK(g.max_off_diagonal < 1e-8);
            }
        }
}

TEST_CASE("interlacing") {
    auto r = interlacing_check(1, 1, -0.5);
    REQUIRE(r.positive_roots.size() == 1);
    REQUIRE(r.negative_roots.size() == 1);
    CHECK(r.positive_roots[0] == doctest::Approx(0.20711).epsilon(1e-5));
    CHECK(r.negative_roots[0] == doctest::Approx(-1.20711).epsilon(1e-5));
    CHECK(r.reference_negative == std::vector<double>{-0.5});
    CHECK(r.pass);
    CHECK(interlacing_check(1, 2, -0.25).pass);
    CHECK(interlacing_check(3, 5, -0.75).pass);
    CHECK_THROWS_AS(interlacing_check(1, 1, 0.5), DomainError);
}

TEST_CASE("property: root counts across the parameter range") {
    gen::Source g(17);
    for (int trial = 0; trial < 30; ++trial) {
        int m = g.integer(1, 3), k = g.integer(1, 20);
        double a = g.real(-0.95, -0.05);
        auto r = interlacing_check(m, k, a);
        CAPTURE(m);
        CAPTURE(k);
        CAPTURE(a);
        CHECK(r.counts_ok);
        CHECK(r.simple);
        CHECK(r.pass);
    }
}

TEST_CASE("property: critical points are the roots of the two Laguerre factors") {
    gen::Source g(23);
    for (int trial = 0; trial < 15; ++trial) {
        int m = g.integer(1, 3), k = g.integer(2, 10);
        Rational a = g.rational(9, 10) / 10 - Rational(1, 2);
        if (a <= -1 || a >= 0) continue;
        Alpha al = Alpha::at(a);
        auto crit = real_roots(substitute_alpha(xlag3(m, m + k, al).diff(), a));
        std::vector<double> want = real_roots(substitute_alpha(laguerre(k - 1, plus_alpha(1), al), a));
        auto neg = real_roots(substitute_alpha(laguerre_reflected(m, minus_alpha(-1), al), a));
        want.insert(want.end(), neg.begin(), neg.end());
        std::sort(want.begin(), want.end());
        REQUIRE(crit.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i)
            CHECK(std::abs(crit[i] - want[i]) < 1e-8 * std::max(1.0, std::abs(want[i])));
    }
}

TEST_CASE("asymptotic trends") {
    auto t3 = asymptotics_probe(Family::TypeIII, 1, -0.5, {5, 10, 20, 40});
    CHECK(t3.all_decreasing);
    CHECK(t3.rows.back().first_positive_root < t3.rows.front().first_positive_root);

    auto t1 = asymptotics_probe(Family::TypeI, 1, 0.5, {200});
    CHECK(t1.rows[0].scaled_root_relative[0] < 0.05);
    CHECK_THROWS_AS(asymptotics_probe(Family::TypeIII, 1, -0.5, {10, 5}), DomainError);
}
