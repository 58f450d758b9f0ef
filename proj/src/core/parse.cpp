#include "xlag/core/parse.hpp"

#include "xlag/core/error.hpp"

#include <cctype>

namespace xlag {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    XPoly run() {
        XPoly v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw DomainError("cannot parse polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    XPoly expr() {
        XPoly v = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                v += term();
            } else if (c == '-') {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    static bool starts_factor(char c) {
        return c == '(' || c == 'a' || c == 'x' || std::isdigit(static_cast<unsigned char>(c));
    }

    XPoly term() {
        XPoly v = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                v *= unary();
            } else if (c == '/') {
                ++pos_;
                XPoly d = unary();
                if (d.degree() != 0 || !d.leading().is_constant()) fail("division by a non-constant");
                v *= AlphaPoly(Rational(1) / d.leading().leading());
            } else if (starts_factor(c)) {
                v *= power();
            } else {
                return v;
            }
        }
    }

    XPoly unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    XPoly power() {
        XPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected an exponent");
            int e = std::stoi(s_.substr(start, pos_ - start));
            XPoly r(1);
            for (int i = 0; i < e; ++i) r *= base;
            return r;
        }
        return base;
    }

    XPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            XPoly v = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return v;
        }
        if (c == 'a') {
            ++pos_;
            return XPoly(AlphaPoly::param());
        }
        if (c == 'x') {
            ++pos_;
            return XPoly::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            return XPoly(AlphaPoly(parse_rational(s_.substr(start, pos_ - start))));
        }
        fail(c ? "unexpected character" : "unexpected end of input");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

XPoly parse_xpoly(const std::string& text) { return Parser(text).run(); }

} // namespace xlag
