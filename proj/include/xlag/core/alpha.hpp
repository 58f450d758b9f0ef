#pragma once

#include "xlag/core/alpha_poly.hpp"

#include <optional>
#include <string>

namespace xlag {

// Selects whether constructors keep the parameter symbolic or fix it at an
// exact rational value up front. Pinning avoids carrying large parameter
// polynomials when only one numeric instance is needed.
class Alpha {
public:
    Alpha() = default;
    static Alpha symbolic() { return {}; }
    static Alpha at(const Rational& v) {
        Alpha al;
        al.value_ = v;
        return al;
    }

    bool pinned() const { return value_.has_value(); }
    const Rational& value() const { return *value_; }

    // sign * a + offset, either as a polynomial or as a constant.
    AlphaPoly affine(int sign, const Rational& offset) const {
        if (value_) return AlphaPoly(Rational(sign * *value_ + offset));
        return AlphaPoly::linear(sign, offset);
    }

    // Maps a symbolic parameter polynomial into this mode.
    AlphaPoly bind(const AlphaPoly& p) const { return value_ ? AlphaPoly(p.eval(*value_)) : p; }

    std::string key() const { return value_ ? value_->get_str() : std::string("a"); }

private:
    std::optional<Rational> value_;
};

} // namespace xlag
