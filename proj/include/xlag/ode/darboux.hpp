#pragma once

#include "xlag/ode/expression.hpp"

#include <string>

namespace xlag {

// Quasi-rational solutions of the classical equation, stored through their
// logarithmic derivative u = phi'/phi:
//   phi0 = L_m^a(x)                    eigenvalue m
//   phi1 = e^x L_m^a(-x)               eigenvalue -(a+1+m)
//   phi2 = x^{-a} L_m^{-a}(x)          eigenvalue m-a
//   phi3 = x^{-a} e^x L_m^{-a}(-x)     eigenvalue -(m+1)
struct SeedFunction {
    int tag;
    int m;
    RatFunc log_derivative;
    AlphaPoly eigenvalue;
};

SeedFunction seed(int tag, int m);

// -x (u' + u^2) + (x - a - 1) u == eigenvalue, the Riccati form of the
// classical equation for phi.
bool seed_eigen_check(const SeedFunction& s);

// Partner expression x y'' + q y' + r y of the rational factorization with
// gauge b, where
//   q = 2 + a - x - 2x b'/b,
//   w = -u + b'/b - (1 + a - x)/x,
//   r = -x (w' + w^2) - q w + lambda,
// returned with the overall sign flipped so that a2 = -x.
ExpressionSpec darboux_partner(const SeedFunction& s, const RatFunc& gauge, const AlphaPoly& lambda);

struct PartnerComparison {
    bool a2_equal = false;
    bool a1_equal = false;
    bool a0_constant_offset = false;  // a0 differs by a parameter polynomial only
    AlphaPoly a0_offset;              // partner a0 minus target a0
    bool ok() const { return a2_equal && a1_equal && a0_constant_offset; }
};

PartnerComparison compare_expressions(const ExpressionSpec& partner, const ExpressionSpec& target);

// Canonical seed/gauge pairings, each compared with the matching family at a
// shifted parameter: phi1 with gauge L_m^a(-x) gives Type I at a+1,
// phi2 with gauge x L_m^{-a}(x) gives Type II at a-1, and phi3 with gauge
// x L_m^{-a}(-x) gives Type III at a-1.
PartnerComparison darboux_family_check(Family f, int m);

} // namespace xlag
