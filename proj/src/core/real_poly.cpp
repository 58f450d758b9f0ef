#include "xlag/core/real_poly.hpp"

#include "xlag/core/error.hpp"

#include <algorithm>

namespace xlag {

RealPoly::RealPoly(std::vector<Rational> exact, Rational alpha, Provenance prov)
    : exact_(std::move(exact)), alpha_(std::move(alpha)), prov_(std::move(prov)) {
    while (!exact_.empty() && exact_.back() == 0) exact_.pop_back();
    coeffs_.reserve(exact_.size());
    for (const auto& q : exact_) coeffs_.push_back(q.get_d());
    wide_.reserve(exact_.size());
    unsigned long prec = precision_bits();
    for (const auto& q : exact_) {
        mpf_class w(0, prec);
        w = q;
        wide_.push_back(w);
    }
}

unsigned long RealPoly::precision_bits() const {
    return std::max<unsigned long>(128, 64 + 6 * static_cast<unsigned long>(std::max(0, degree())));
}

mpf_class RealPoly::eval_mpf(const mpf_class& x) const {
    unsigned long prec = std::max(precision_bits(), x.get_prec());
    mpf_class acc(0, prec);
    for (auto it = wide_.rbegin(); it != wide_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

double RealPoly::eval(double x) const {
    if (exact_.empty()) return 0.0;
    mpf_class xx(x, precision_bits());
    return eval_mpf(xx).get_d();
}

double RealPoly::eval_fast(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RealPoly RealPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < exact_.size(); ++k) d.push_back(exact_[k] * static_cast<long>(k));
    return RealPoly(std::move(d), alpha_, prov_);
}

RealPoly substitute_alpha(const XPoly& p, const Rational& a, Provenance prov) {
    std::vector<Rational> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.eval(a));
    return RealPoly(std::move(v), a, std::move(prov));
}

RealPoly substitute_alpha(const XPoly& p, double a, Provenance prov) {
    return substitute_alpha(p, from_double(a), std::move(prov));
}

} // namespace xlag
