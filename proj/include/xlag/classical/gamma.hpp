#pragma once

namespace xlag {

// Lanczos approximation (g = 7, nine terms) with the reflection formula for
// arguments below 1/2. Relative accuracy is about 1e-14 away from the poles.
// Throws DomainError at the poles 0, -1, -2, ...
double gamma_fn(double x);

// log|Gamma(x)| for x > 0.
double log_gamma_fn(double x);

} // namespace xlag
