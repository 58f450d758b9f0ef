#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace xlag {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 4000;  // Gauss-Kronrod intervals
    int max_level = 10;           // tanh-sinh step halvings
};

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    int subdivisions = 0;
    // error_estimate is within the requested tolerance.
    bool converged = false;
};

// f(x, out) fills out[0..dim) with the integrand components at x.
using VectorIntegrand = std::function<void(double, std::vector<double>&)>;
// Maps the current component values to the magnitudes the relative
// tolerance is measured against. Defaults to |value|.
using ToleranceScale = std::function<std::vector<double>(const std::vector<double>&)>;

// Integral over (0, inf), split at x = 1: tanh-sinh on (0, 1), which absorbs an
// integrable x^a singularity at the origin, and adaptive 7/15-point
// Gauss-Kronrod on (1, inf) after x = 1 + t/(1 - t).
std::vector<QuadratureResult> integrate_half_line(const VectorIntegrand& f, std::size_t dim,
                                                  const QuadratureOptions& opt = {},
                                                  const ToleranceScale& scale = {});
QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     const QuadratureOptions& opt = {});

// Tanh-sinh on (0, b); the origin may carry an integrable singularity.
QuadratureResult integrate_from_zero(const std::function<double(double)>& f, double b,
                                     const QuadratureOptions& opt = {});

// Adaptive Gauss-Kronrod on a finite interval.
QuadratureResult integrate_interval(const std::function<double(double)>& f, double lo, double hi,
                                    const QuadratureOptions& opt = {});

} // namespace xlag
