#include "xlag/numerics/bessel.hpp"

#include "xlag/classical/gamma.hpp"
#include "xlag/core/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace xlag {

namespace {

constexpr double kSwitch = 12.0;

double series(double a, double x) {
    double h = x / 2;
    double term = std::pow(h, a) / gamma_fn(a + 1);
    double sum = term;
    double q = -h * h;
    for (int k = 1; k < 200; ++k) {
        term *= q / (k * (k + a));
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

double hankel(double a, double x) {
    double mu = 4 * a * a;
    double p = 1, q = 0;
    double term = 1;
    double last = INFINITY;
    for (int k = 1; k < 60; ++k) {
        double odd = 2 * k - 1;
        term *= (mu - odd * odd) / (k * 8 * x);
        if (std::abs(term) > last) break;  // past the smallest term
        last = std::abs(term);
        if (k % 2 == 1) {
            q += (k % 4 == 1 ? 1 : -1) * term;
        } else {
            p += (k % 4 == 2 ? -1 : 1) * term;
        }
        if (last < 1e-17) break;
    }
    double chi = x - (a / 2 + 0.25) * std::numbers::pi;
    return std::sqrt(2 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double mcmahon(double a, int i) {
    double mu = 4 * a * a;
    double b = (i + a / 2 - 0.25) * std::numbers::pi;
    double e = 8 * b;
    return b - (mu - 1) / e - 4 * (mu - 1) * (7 * mu - 31) / (3 * e * e * e) -
           32 * (mu - 1) * (83 * mu * mu - 982 * mu + 3779) / (15 * std::pow(e, 5));
}

double newton(double a, double x) {
    for (int it = 0; it < 50; ++it) {
        double j = bessel_j(a, x);
        double dj = a / x * j - bessel_j(a + 1, x);
        double step = j / dj;
        x -= step;
        if (std::abs(step) <= 1e-14 * x) return x;
    }
    throw ConvergenceFailure("bessel_zero: Newton iteration did not settle");
}

} // namespace

double bessel_j(double a, double x) {
    if (a <= -1) throw DomainError("bessel_j: order must exceed -1");
    if (x < 0) throw DomainError("bessel_j: argument must be non-negative");
    return x < kSwitch ? series(a, x) : hankel(a, x);
}

double bessel_zero(double a, int i) {
    if (a <= -1) throw DomainError("bessel_zero: order must exceed -1");
    if (i < 1) throw DomainError("bessel_zero: index starts at 1");
    // Each zero is found from its own McMahon guess; consecutive zeros are
    // separated by roughly pi, which guards against landing on a neighbour.
    double prev = 0;
    double z = 0;
    for (int k = 1; k <= i; ++k) {
        z = newton(a, mcmahon(a, k));
        if (z <= prev + 1.0)
            throw ConvergenceFailure("bessel_zero: zero " + std::to_string(k) + " not isolated");
        prev = z;
    }
    return z;
}

} // namespace xlag
