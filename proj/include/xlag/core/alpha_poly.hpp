#pragma once

#include "xlag/core/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace xlag {

// Dense univariate polynomial in the symbolic parameter (printed as `a`),
// coefficients ascending. The zero polynomial has an empty coefficient list.
class AlphaPoly {
public:
    AlphaPoly() = default;
    AlphaPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    AlphaPoly(long c);             // NOLINT(google-explicit-constructor)
    explicit AlphaPoly(std::vector<Rational> coeffs);

    // sign * a + offset
    static AlphaPoly linear(int sign, const Rational& offset);
    static AlphaPoly param() { return linear(1, 0); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    Rational leading() const;
    Rational constant_term() const { return coeff(0); }

    Rational eval(const Rational& a) const;
    double eval(double a) const;

    // p(sign * a + offset)
    AlphaPoly compose_linear(int sign, const Rational& offset) const;

    AlphaPoly monic() const;

    AlphaPoly operator-() const;
    AlphaPoly& operator+=(const AlphaPoly& o);
    AlphaPoly& operator-=(const AlphaPoly& o);
    AlphaPoly& operator*=(const AlphaPoly& o);
    AlphaPoly& operator*=(const Rational& s);

    friend AlphaPoly operator+(AlphaPoly p, const AlphaPoly& q) { return p += q; }
    friend AlphaPoly operator-(AlphaPoly p, const AlphaPoly& q) { return p -= q; }
    friend AlphaPoly operator*(const AlphaPoly& p, const AlphaPoly& q);
    friend bool operator==(const AlphaPoly& p, const AlphaPoly& q) { return p.c_ == q.c_; }
    friend bool operator!=(const AlphaPoly& p, const AlphaPoly& q) { return !(p == q); }

    // Expanded form, e.g. "a^2 + a".
    std::string to_expanded_string() const;
    // Rational multiple of linear factors when they exist, e.g. "a*(a+1)",
    // "-3/2*(a-1)"; an irreducible remainder is printed expanded.
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct AlphaDivMod {
    AlphaPoly quot;
    AlphaPoly rem;
};

AlphaDivMod divmod(const AlphaPoly& num, const AlphaPoly& den);
// Throws NotDivisible when the remainder is nonzero.
AlphaPoly divide_exact(const AlphaPoly& num, const AlphaPoly& den);
// Monic gcd; gcd(0, 0) = 0.
AlphaPoly gcd(const AlphaPoly& p, const AlphaPoly& q);

namespace detail {
// Sign and unsigned body of the factored form; `product` is false when the
// body is a bare sum that needs parentheses before being multiplied.
struct FactoredText {
    bool negative = false;
    std::string body;
    bool product = true;
};
FactoredText factored_text(const AlphaPoly& p);
} // namespace detail

// Generalized binomial coefficient top*(top-1)*...*(top-j+1)/j!; 1 for j = 0
// and 0 for j < 0.
AlphaPoly binomial(const AlphaPoly& top, int j);

} // namespace xlag
