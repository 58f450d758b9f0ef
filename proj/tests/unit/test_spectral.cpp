#include "doctest.h"

#include "support/gen.hpp"

#include "xlag/core/error.hpp"
#include "xlag/exceptional/polynomials.hpp"
#include "xlag/numerics/orthogonality.hpp"
#include "xlag/ode/expression.hpp"
#include "xlag/spectral/classification.hpp"
#include "xlag/spectral/probes.hpp"

#include <cmath>

using namespace xlag;

namespace {

bool circle_at_zero(const Classification& c) { return c.at_zero.kind == EndpointKind::LimitCircle; }

double admissible_sample(gen::Source& g, Family f, int m) {
    switch (f) {
    case Family::TypeI: return g.real(0.01, 3.0);
    case Family::TypeII: return g.real(std::max(-0.99, m - 1 + 0.01), m + 2.0);
    case Family::TypeIII: return g.real(-0.99, -0.01);
    }
    return 0;
}

} // namespace

TEST_CASE("endpoint classification") {
    auto c1 = classify(Family::TypeI, 2, 0.5);
    CHECK(circle_at_zero(c1));
    CHECK(c1.at_infinity.kind == EndpointKind::LimitPoint);
    CHECK(c1.deficiency == DeficiencyIndex{1, 1});

    auto c2 = classify(Family::TypeII, 2, 1.5);
    CHECK_FALSE(circle_at_zero(c2));
    CHECK(c2.deficiency == DeficiencyIndex{0, 0});

    auto c3 = classify(Family::TypeIII, 1, -0.5);
    CHECK(circle_at_zero(c3));
    CHECK(c3.deficiency == DeficiencyIndex{1, 1});

    // The boundary value a = 1 belongs to the limit-point side.
    CHECK_FALSE(circle_at_zero(classify(Family::TypeI, 1, 1.0)));
    CHECK_FALSE(circle_at_zero(classify(Family::TypeII, 1, 1.0)));
    CHECK(circle_at_zero(classify(Family::TypeII, 0, -0.5)));
    CHECK_FALSE(circle_at_zero(classify(Family::TypeII, 0, 1.5)));
    CHECK_THROWS_AS(classify(Family::TypeIII, 1, 0.5), DomainError);
    CHECK_THROWS_AS(classify(Family::TypeII, 0, 0.0), DomainError);
}

TEST_CASE("indicial roots") {
    for (Family f : {Family::TypeI, Family::TypeII, Family::TypeIII}) {
        auto r = frobenius_indicial(f);
        CHECK(r.first == AlphaPoly(0));
        CHECK(r.second == AlphaPoly::linear(-1, 0));
    }
    auto r = frobenius_indicial(Family::TypeI);
    CHECK(r.second_at(0.5) == -0.5);
    CHECK(r.degenerate_at(0.0));
    CHECK_FALSE(r.degenerate_at(0.5));
}

TEST_CASE("square integrability near the origin") {
    auto p = l2_membership_probe(Family::TypeI, 1, 0.5, -0.5);
    CHECK(p.exponent == -0.5);
    CHECK(p.integrable);
    CHECK(p.agrees);
    auto q = l2_membership_probe(Family::TypeI, 1, 1.5, -1.5);
    CHECK(q.exponent == -1.5);
    CHECK_FALSE(q.integrable);
    CHECK(q.agrees);
    for (double a : {0.3, 1.7, 4.0}) CHECK(l2_membership_probe(Family::TypeI, 2, a, 0.0).integrable);
}

TEST_CASE("property: classification agrees with the exponent test") {
    gen::Source g(101);
    for (int trial = 0; trial < 200; ++trial) {
        Family f = static_cast<Family>(g.integer(0, 2));
        int m = g.integer(std::max(min_m(f), 0), 3);
        double a = admissible_sample(g, f, m);
        if (a == 0.0 || std::abs(a - 1) < 1e-3) continue;
        CAPTURE(family_name(f));
        CAPTURE(m);
        CAPTURE(a);
        // The second Frobenius solution x^{-a} decides the class at 0.
        auto probe = l2_membership_probe(f, m, a, -a);
        CHECK(circle_at_zero(classify(f, m, a)) == probe.integrable);
        if (trial % 10 == 0) CHECK(probe.agrees);
    }
}

TEST_CASE("sesquilinear form") {
    auto one = SmoothFunction::power(0);
    auto xa = SmoothFunction::power(-0.5);
    CHECK(sesquilinear_form(Family::TypeI, 1, 0.5, xa, xa, 0.3) == 0.0);
    // a e^{-x} / L_1^{a-1}(-x)^2 at the origin: 0.5 / 0.5^2.
    auto lim = sesquilinear_limit_at_zero(Family::TypeI, 1, 0.5, xa, one);
    CHECK(lim.limit == doctest::Approx(2.0).epsilon(1e-9));
    auto lim3 = sesquilinear_limit_at_zero(Family::TypeIII, 1, -0.5, SmoothFunction::power(0.5), one);
    CHECK(std::abs(lim3.limit) > 0.1);
    CHECK_THROWS_AS(sesquilinear_form(Family::TypeI, 1, 0.5, xa, one, 0.0), DomainError);
}

TEST_CASE("property: sesquilinear form is antisymmetric") {
    gen::Source g(7);
    for (int trial = 0; trial < 50; ++trial) {
        Family f = static_cast<Family>(g.integer(0, 2));
        int m = g.integer(std::max(1, min_m(f)), 3);
        double a = admissible_sample(g, f, m);
        auto degrees = DegreeSet(f, m).first(4);
        auto u = SmoothFunction::polynomial(exceptional_at(f, m, degrees[g.integer(0, 3)], a));
        auto v = SmoothFunction::power_times(g.real(-1, 1), exceptional_at(f, m, degrees[g.integer(0, 3)], a));
        double x = g.real(0.05, 8.0);
        double uv = sesquilinear_form(f, m, a, u, v, x), vu = sesquilinear_form(f, m, a, v, u, x);
        CHECK(uv == doctest::Approx(-vu).epsilon(1e-12));
    }
}

TEST_CASE("boundary functionals") {
    auto p = exceptional_at(Family::TypeIII, 1, 2, -0.5);
    CHECK(boundary_functional(BoundaryKind::WeightedDerivative, -0.5, SmoothFunction::polynomial(p)).vanishes);
    auto bad = boundary_functional(BoundaryKind::WeightedDerivative, -0.5, SmoothFunction::power(0.5));
    CHECK_FALSE(bad.vanishes);
    CHECK(bad.limit == doctest::Approx(0.5).epsilon(1e-12));
    auto q = exceptional_at(Family::TypeIII, 1, 3, -0.5);
    CHECK(boundary_functional(BoundaryKind::EulerCombination, 0.5, SmoothFunction::power_times(-0.5, q)).vanishes);
    CHECK_THROWS_AS(boundary_functional(BoundaryKind::None, 0.5, SmoothFunction::power(1)), DomainError);
}

TEST_CASE("property: the boundary condition separates eigenpolynomials from x^-a") {
    for (Family f : {Family::TypeI, Family::TypeII, Family::TypeIII})
        for (int m = min_m(f); m <= 3; ++m) {
            double a = f == Family::TypeIII ? -0.5 : (f == Family::TypeI ? 0.5 : m - 0.5 + 1.0 / 64);
            if (f == Family::TypeII && m == 0) a = 0.5;
            for (int n : DegreeSet(f, m).up_to(m + 6)) {
                CAPTURE(family_name(f));
                CAPTURE(m);
                CAPTURE(n);
                auto p = SmoothFunction::polynomial(exceptional_at(f, m, n, a));
                CHECK(boundary_functional(BoundaryKind::WeightedDerivative, a, p).vanishes);
            }
            CHECK_FALSE(boundary_functional(BoundaryKind::WeightedDerivative, a, SmoothFunction::power(-a)).vanishes);
        }
}

TEST_CASE("property: alternate operator eigenfunctions") {
    for (int m = 1; m <= 2; ++m)
        for (int n : DegreeSet(Family::TypeIII, m).first(5)) {
            CHECK(s_operator_eigen_check(m, n));
            for (double a : {0.25, 0.5, 0.75}) {
                auto h = SmoothFunction::power_times(-a, exceptional_at(Family::TypeIII, m, n, -a));
                CHECK(boundary_functional(BoundaryKind::EulerCombination, a, h).vanishes);
                CHECK_FALSE(boundary_functional(BoundaryKind::EulerCombination, a, SmoothFunction::power(0)).vanishes);
            }
        }
}

TEST_CASE("spectra") {
    auto s3 = spectrum(OperatorTag::TypeIII, 1, -0.5, 4);
    std::vector<int> deg{0, 2, 3, 4};
    std::vector<double> ev{-1.5, 0.5, 1.5, 2.5};
    for (int i = 0; i < 4; ++i) {
        CHECK(s3.entries[i].degree == deg[i]);
        CHECK(s3.entries[i].eigenvalue == ev[i]);
    }
    auto s1 = spectrum(OperatorTag::TypeI, 3, 2.0, 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(s1.entries[i].degree == 3 + i);
        CHECK(s1.entries[i].eigenvalue == i);
    }
    auto sa = spectrum(OperatorTag::TypeIAlt, 1, 0.5, 3);
    CHECK(sa.entries[0].eigenvalue == -1.5);
    CHECK(sa.entries[1].eigenvalue == 0.5);
    CHECK(sa.entries[2].eigenvalue == 1.5);
    CHECK(sa.entries[1].degree == 2);
    CHECK_THROWS_AS(spectrum(OperatorTag::TypeIAlt, 1, 1.5, 3), DomainError);
    CHECK_THROWS_AS(spectrum(OperatorTag::TypeI, 1, 0.5, 0), DomainError);

    CHECK(boundary_condition(OperatorTag::TypeIII, 1, -0.5) == BoundaryKind::WeightedDerivative);
    CHECK(boundary_condition(OperatorTag::TypeI, 2, 1.5) == BoundaryKind::None);
    CHECK(boundary_condition(OperatorTag::TypeIAlt, 1, 0.5) == BoundaryKind::EulerCombination);
    CHECK(boundary_text(BoundaryKind::WeightedDerivative) == "lim x^{a+1} f' = 0");
    CHECK(parse_operator("S_I") == OperatorTag::TypeIAlt);
    CHECK_THROWS_AS(parse_operator("T_IV"), DomainError);
}

TEST_CASE("property: integer spectra for the first two families") {
    gen::Source g(3);
    for (int trial = 0; trial < 30; ++trial) {
        OperatorTag op = g.integer(0, 1) ? OperatorTag::TypeI : OperatorTag::TypeII;
        Family f = operator_family(op);
        int m = g.integer(std::max(1, min_m(f)), 4);
        double a = admissible_sample(g, f, m);
        int cutoff = g.integer(1, 10);
        auto s = spectrum(op, m, a, cutoff);
        REQUIRE(static_cast<int>(s.entries.size()) == cutoff);
        for (int i = 0; i < cutoff; ++i) {
            CHECK(s.entries[i].eigenvalue == i);
            CHECK(DegreeSet(f, m).contains(s.entries[i].degree));
            CHECK(s.entries[i].degree == m + i);
        }
    }
}

TEST_CASE("second solution growth") {
    auto g1 = second_solution_growth_probe(Family::TypeI, 1, 0.5, {5, 10, 20, 40});
    CHECK(g1.pass);
    for (std::size_t i = 1; i < g1.xs.size(); ++i)
        CHECK(g1.second_weighted[i] >= g1.second_weighted[i - 1] * std::exp((g1.xs[i] - g1.xs[i - 1]) / 2));
    CHECK(second_solution_growth_probe(Family::TypeIII, 1, -0.5, {5, 10, 20, 40}).pass);
    CHECK(second_solution_growth_probe(Family::TypeII, 2, 1.5, {5, 10, 20, 40}).pass);
    CHECK(g1.first_bounded);
    CHECK_THROWS_AS(second_solution_growth_probe(Family::TypeI, 1, 0.5, {5}), DomainError);
    CHECK_THROWS_AS(second_solution_growth_probe(Family::TypeI, 1, 0.5, {1, 5}), DomainError);
}

TEST_CASE("projection residuals decrease") {
    for (int m : {1, 2})
        for (int j = 0; j <= 6; ++j) {
            auto pr = projection_residuals(Family::TypeIII, m, -0.5, j, 12);
            CAPTURE(m);
            CAPTURE(j);
            CHECK(pr.non_increasing);
            CHECK(pr.residual.size() == 12);
            if (j > 0) CHECK(pr.residual.back() < pr.residual.front());
        }
}
