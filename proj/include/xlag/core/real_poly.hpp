#pragma once

#include "xlag/core/x_poly.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace xlag {

struct Provenance {
    std::string family;  // "I", "II", "III", "L" or empty
    int m = -1;
    int n = -1;
};

// A polynomial in x after the parameter has been fixed. The exact rational
// coefficients are kept alongside their double images so that evaluation can
// be carried out in extended precision where cancellation is severe.
class RealPoly {
public:
    RealPoly() = default;
    explicit RealPoly(std::vector<Rational> exact, Rational alpha = 0, Provenance prov = {});

    int degree() const { return static_cast<int>(exact_.size()) - 1; }
    bool is_zero() const { return exact_.empty(); }
    const std::vector<double>& coeffs() const { return coeffs_; }
    const std::vector<Rational>& exact() const { return exact_; }
    const Rational& source_alpha() const { return alpha_; }
    double source_alpha_d() const { return alpha_.get_d(); }
    const Provenance& provenance() const { return prov_; }
    void set_provenance(Provenance p) { prov_ = std::move(p); }

    // Working precision used by eval(); grows with the degree.
    unsigned long precision_bits() const;

    // Horner in extended precision, rounded once to double.
    double eval(double x) const;
    // Plain double Horner; cheap but unreliable at large degree.
    double eval_fast(double x) const;
    // Extended-precision value at an extended-precision point.
    mpf_class eval_mpf(const mpf_class& x) const;

    RealPoly derivative() const;

    friend bool operator==(const RealPoly& p, const RealPoly& q) { return p.exact_ == q.exact_; }

private:
    std::vector<Rational> exact_;
    std::vector<double> coeffs_;
    std::vector<mpf_class> wide_;
    Rational alpha_ = 0;
    Provenance prov_;
};

// Fixes the parameter at an exact value.
RealPoly substitute_alpha(const XPoly& p, const Rational& a, Provenance prov = {});
// A double is converted exactly (it is a dyadic rational) before substitution.
RealPoly substitute_alpha(const XPoly& p, double a, Provenance prov = {});

} // namespace xlag
