#include "xlag/core/rational.hpp"

#include "xlag/core/error.hpp"

#include <cctype>
#include <cmath>

namespace xlag {

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational from_double(double v) {
    if (!std::isfinite(v)) throw DomainError("non-finite value cannot be made exact");
    return Rational(v);
}

namespace {

Integer pow10(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw DomainError("empty number");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational num = parse_rational(s.substr(0, slash));
        Rational den = parse_rational(s.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator in '" + text + "'");
        Rational q = num / den;
        q.canonicalize();
        return q;
    }

    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    bool any = false;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            any = true;
            if (seen_dot) ++frac_digits;
        } else if (ch == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!any) throw DomainError("malformed number '" + text + "'");
    long exponent = 0;
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') throw DomainError("malformed number '" + text + "'");
        std::size_t used = 0;
        try {
            exponent = std::stol(s.substr(i + 1), &used);
        } catch (const std::exception&) {
            throw DomainError("malformed exponent in '" + text + "'");
        }
        if (i + 1 + used != s.size()) throw DomainError("malformed number '" + text + "'");
    }
    Rational q{Integer(digits, 10)};
    long shift = exponent - frac_digits;
    if (shift > 0)
        q *= Rational(pow10(static_cast<unsigned long>(shift)));
    else if (shift < 0)
        q /= Rational(pow10(static_cast<unsigned long>(-shift)));
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace xlag
