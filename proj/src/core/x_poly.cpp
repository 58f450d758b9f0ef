#include "xlag/core/x_poly.hpp"

#include "xlag/core/error.hpp"

#include <algorithm>
#include <utility>

namespace xlag {

XPoly::XPoly(const AlphaPoly& c) {
    if (!c.is_zero()) c_.push_back(c);
}

XPoly::XPoly(std::vector<AlphaPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

XPoly XPoly::monomial(int k, const AlphaPoly& c) {
    if (c.is_zero()) return {};
    std::vector<AlphaPoly> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return XPoly(std::move(v));
}

void XPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

AlphaPoly XPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return {};
    return c_[k];
}

AlphaPoly XPoly::leading() const { return c_.empty() ? AlphaPoly() : c_.back(); }

int XPoly::alpha_degree() const {
    int d = -1;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
}

XPoly XPoly::diff() const {
    if (c_.size() <= 1) return {};
    std::vector<AlphaPoly> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        v[k - 1] = c_[k];
        v[k - 1] *= Rational(static_cast<long>(k));
    }
    return XPoly(std::move(v));
}

XPoly XPoly::reflect() const {
    XPoly r = *this;
    for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
    return r;
}

XPoly XPoly::antiderivative() const {
    if (c_.empty()) return {};
    std::vector<AlphaPoly> v(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        v[k + 1] = c_[k];
        v[k + 1] *= Rational(1, static_cast<long>(k + 1));
    }
    return XPoly(std::move(v));
}

XPoly XPoly::map_alpha(int sign, const Rational& offset) const {
    std::vector<AlphaPoly> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c.compose_linear(sign, offset));
    return XPoly(std::move(v));
}

XPoly XPoly::shift_up(int k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<AlphaPoly> v(static_cast<std::size_t>(k));
    v.insert(v.end(), c_.begin(), c_.end());
    return XPoly(std::move(v));
}

AlphaPoly XPoly::eval_x(const Rational& x) const {
    AlphaPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Rational XPoly::eval(const Rational& a, const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->eval(a);
    return acc;
}

AlphaPoly XPoly::content() const {
    AlphaPoly g;
    for (const auto& c : c_) {
        g = gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

XPoly XPoly::primitive() const {
    if (c_.empty()) return *this;
    return divide_exact(*this, content());
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

XPoly operator*(const XPoly& p, const XPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<AlphaPoly> r(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < q.c_.size(); ++j) {
            if (q.c_[j].is_zero()) continue;
            r[i + j] += p.c_[i] * q.c_[j];
        }
    }
    return XPoly(std::move(r));
}

XPoly& XPoly::operator*=(const XPoly& o) { return *this = *this * o; }

XPoly& XPoly::operator*=(const AlphaPoly& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

PseudoDivision pseudo_divide(const XPoly& num, const XPoly& den) {
    if (den.is_zero()) throw DivisionByZeroPoly("division by the zero polynomial in x");
    int dd = den.degree();
    if (num.degree() < dd) return {XPoly(), num, AlphaPoly(1)};
    AlphaPoly lead = den.leading();
    int steps = num.degree() - dd + 1;
    XPoly q, r = num;
    int used = 0;
    while (!r.is_zero() && r.degree() >= dd) {
        XPoly s = XPoly::monomial(r.degree() - dd, r.leading());
        q = q * lead + s;
        r = r * lead - s * den;
        ++used;
    }
    AlphaPoly pad(1);
    for (int i = used; i < steps; ++i) pad *= lead;
    AlphaPoly scale(1);
    for (int i = 0; i < steps; ++i) scale *= lead;
    return {q * pad, r * pad, scale};
}

XPoly divide_exact(const XPoly& num, const AlphaPoly& den) {
    if (den.is_zero()) throw DivisionByZeroPoly("division by the zero polynomial in a");
    std::vector<AlphaPoly> v;
    v.reserve(num.coeffs().size());
    for (const auto& c : num.coeffs()) v.push_back(divide_exact(c, den));
    return XPoly(std::move(v));
}

XPoly divide_exact(const XPoly& num, const XPoly& den) {
    if (den.is_zero()) throw DivisionByZeroPoly("division by the zero polynomial in x");
    if (den.degree() == 0) return divide_exact(num, den.leading());
    auto pd = pseudo_divide(num, den);
    if (!pd.rem.is_zero())
        throw NotDivisible(num.to_string() + " is not divisible by " + den.to_string());
    return divide_exact(pd.quot, pd.scale);
}

XPoly normalize_leading(const XPoly& p) {
    if (p.is_zero()) return p;
    XPoly r = p;
    r *= AlphaPoly(Rational(1) / p.leading().leading());
    return r;
}

XPoly gcd(const XPoly& p, const XPoly& q) {
    if (p.is_zero()) return normalize_leading(q);
    if (q.is_zero()) return normalize_leading(p);
    AlphaPoly cont = gcd(p.content(), q.content());
    XPoly a = p.primitive(), b = q.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        XPoly r = pseudo_divide(a, b).rem;
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive();
    }
    XPoly g = a.degree() == 0 ? XPoly(AlphaPoly(1)) : a.primitive();
    return normalize_leading(g * cont);
}

std::string XPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    bool single = std::count_if(c_.begin(), c_.end(), [](const AlphaPoly& c) { return !c.is_zero(); }) == 1;
    for (int k = degree(); k >= 0; --k) {
        const AlphaPoly& c = c_[k];
        if (c.is_zero()) continue;
        auto ft = detail::factored_text(c);
        std::string body = ft.body;
        if (!ft.product && !(single && k == 0 && !ft.negative)) body = "(" + body + ")";
        std::string term;
        std::string xpart = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        if (k == 0)
            term = body;
        else if (body == "1")
            term = xpart;
        else
            term = body + "*" + xpart;
        if (first)
            out += ft.negative ? "-" + term : term;
        else
            out += ft.negative ? " - " + term : " + " + term;
        first = false;
    }
    return out;
}

} // namespace xlag
