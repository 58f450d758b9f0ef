#include "xlag/classical/gamma.hpp"

#include "xlag/core/error.hpp"

#include <cmath>
#include <numbers>

namespace xlag {

namespace {

constexpr double kG = 7.0;
constexpr double kCoef[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_sum(double z) {
    double s = kCoef[0];
    for (int i = 1; i < 9; ++i) s += kCoef[i] / (z + i);
    return s;
}

} // namespace

double gamma_fn(double x) {
    if (x <= 0 && x == std::floor(x)) throw DomainError("gamma pole at " + std::to_string(x));
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
    }
    double z = x - 1.0;
    double t = z + kG + 0.5;
    // t^(z+1/2) e^{-t} split in halves so that large arguments do not overflow early.
    double half = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * lanczos_sum(z);
}

double log_gamma_fn(double x) {
    if (x <= 0) throw DomainError("log_gamma_fn needs a positive argument");
    if (x < 0.5) return std::log(std::abs(gamma_fn(x)));
    double z = x - 1.0;
    double t = z + kG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

} // namespace xlag
