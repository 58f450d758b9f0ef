#include "xlag/core/alpha_poly.hpp"

#include "xlag/core/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace xlag {

AlphaPoly::AlphaPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

AlphaPoly::AlphaPoly(long c) : AlphaPoly(Rational(c)) {}

AlphaPoly::AlphaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

AlphaPoly AlphaPoly::linear(int sign, const Rational& offset) {
    return AlphaPoly(std::vector<Rational>{offset, Rational(sign)});
}

void AlphaPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational AlphaPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

Rational AlphaPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational AlphaPoly::eval(const Rational& a) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
    return acc;
}

double AlphaPoly::eval(double a) const {
    // Exact evaluation then one rounding; coefficient magnitudes vary a lot.
    return eval(Rational(a)).get_d();
}

AlphaPoly AlphaPoly::compose_linear(int sign, const Rational& offset) const {
    AlphaPoly inner = linear(sign, offset);
    AlphaPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= inner;
        acc += AlphaPoly(*it);
    }
    return acc;
}

AlphaPoly AlphaPoly::monic() const {
    if (c_.empty()) return *this;
    AlphaPoly r = *this;
    r *= Rational(1) / c_.back();
    return r;
}

AlphaPoly AlphaPoly::operator-() const {
    AlphaPoly r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

AlphaPoly operator*(const AlphaPoly& p, const AlphaPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> r(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i] == 0) continue;
        for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    }
    AlphaPoly out;
    out.c_ = std::move(r);
    out.trim();
    return out;
}

AlphaPoly& AlphaPoly::operator*=(const AlphaPoly& o) { return *this = *this * o; }

AlphaPoly& AlphaPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& q : c_) q *= s;
    return *this;
}

AlphaDivMod divmod(const AlphaPoly& num, const AlphaPoly& den) {
    if (den.is_zero()) throw DivisionByZeroPoly("division by the zero polynomial in a");
    std::vector<Rational> rem = num.coeffs();
    const auto& d = den.coeffs();
    int dn = den.degree();
    if (num.degree() < dn) return {AlphaPoly(), num};
    std::vector<Rational> quot(num.degree() - dn + 1);
    Rational inv = Rational(1) / d.back();
    for (int k = num.degree() - dn; k >= 0; --k) {
        Rational t = rem[k + dn] * inv;
        quot[k] = t;
        if (t == 0) continue;
        for (int j = 0; j <= dn; ++j) rem[k + j] -= t * d[j];
    }
    rem.resize(dn);
    return {AlphaPoly(std::move(quot)), AlphaPoly(std::move(rem))};
}

AlphaPoly divide_exact(const AlphaPoly& num, const AlphaPoly& den) {
    auto qr = divmod(num, den);
    if (!qr.rem.is_zero())
        throw NotDivisible("(" + num.to_expanded_string() + ") is not divisible by (" +
                           den.to_expanded_string() + ")");
    return qr.quot;
}

AlphaPoly gcd(const AlphaPoly& p, const AlphaPoly& q) {
    AlphaPoly a = p, b = q;
    while (!b.is_zero()) {
        AlphaPoly r = divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

AlphaPoly binomial(const AlphaPoly& top, int j) {
    if (j < 0) return {};
    AlphaPoly acc(1);
    Rational fact = 1;
    for (int i = 0; i < j; ++i) {
        acc *= top - AlphaPoly(i);
        fact *= i + 1;
    }
    acc *= Rational(1) / fact;
    return acc;
}

namespace {

// Compact expanded form of a polynomial with no spaces, e.g. "a^2+2*a-1".
std::string compact(const AlphaPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (neg)
            os << "-";
        else if (!first)
            os << "+";
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "a";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::string power_suffix(int mult) { return mult > 1 ? "^" + std::to_string(mult) : ""; }

} // namespace

std::string AlphaPoly::to_expanded_string() const {
    std::string s = compact(*this);
    std::string out;
    // Spaces around top-level binary operators for readability.
    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if ((ch == '+' || ch == '-') && i > 0 && s[i - 1] != '^' && s[i - 1] != '*') {
            out += ' ';
            out += ch;
            out += ' ';
        } else {
            out += ch;
        }
    }
    return out;
}

namespace detail {

FactoredText factored_text(const AlphaPoly& p) {
    FactoredText ft;
    if (p.is_zero()) {
        ft.body = "0";
        return ft;
    }
    Rational lead = p.leading();
    ft.negative = lead < 0;
    Rational scale = ft.negative ? Rational(-lead) : lead;
    if (p.is_constant()) {
        ft.body = scale.get_str();
        return ft;
    }

    AlphaPoly rest = p.monic();
    int zero_mult = 0;
    while (!rest.is_zero() && rest.constant_term() == 0) {
        rest = divide_exact(rest, AlphaPoly::linear(1, 0));
        ++zero_mult;
    }
    // Integer roots only: the families here factor over small integers, and
    // anything left over is printed expanded inside one pair of parentheses.
    std::vector<std::pair<long, int>> roots;
    for (long mag = 1; mag <= 64 && rest.degree() > 0; ++mag) {
        for (long r : {mag, -mag}) {
            int mult = 0;
            while (rest.degree() > 0 && rest.eval(Rational(r)) == 0) {
                rest = divide_exact(rest, AlphaPoly::linear(1, Rational(-r)));
                ++mult;
            }
            if (mult > 0) roots.emplace_back(r, mult);
        }
    }

    std::vector<std::string> factors;
    if (zero_mult > 0) factors.push_back("a" + power_suffix(zero_mult));
    for (auto [r, mult] : roots) {
        std::string f = r > 0 ? "(a-" + std::to_string(r) + ")" : "(a+" + std::to_string(-r) + ")";
        factors.push_back(f + power_suffix(mult));
    }
    bool has_rest = rest.degree() > 0;
    if (has_rest && factors.empty() && scale == 1) {
        ft.body = compact(rest);
        ft.product = false;
        return ft;
    }
    if (has_rest) factors.push_back("(" + compact(rest) + ")");

    std::string body = scale == 1 ? "" : scale.get_str() + "*";
    for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
    ft.body = body;
    return ft;
}

} // namespace detail

std::string AlphaPoly::to_string() const {
    auto ft = detail::factored_text(*this);
    if (!ft.negative) return ft.body;
    return ft.product ? "-" + ft.body : "-(" + ft.body + ")";
}

} // namespace xlag
