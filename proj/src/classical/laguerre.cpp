#include "xlag/classical/laguerre.hpp"

#include "xlag/classical/gamma.hpp"
#include "xlag/core/error.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace xlag {

std::string LaguerreIndex::to_string() const {
    std::string s = sign > 0 ? "a" : "-a";
    if (offset > 0) s += "+" + std::to_string(offset);
    if (offset < 0) s += std::to_string(offset);
    return s;
}

namespace {

using Key = std::tuple<int, int, std::string>;

// Each entry holds L_0 .. L_N for one parameter; entries only ever grow and
// already-published polynomials are never modified.
struct Cache {
    std::shared_mutex mu;
    std::map<Key, std::vector<XPoly>> table;
};

Cache& cache() {
    static Cache c;
    return c;
}

} // namespace

XPoly laguerre(int n, LaguerreIndex idx, const Alpha& al) {
    if (n < 0) return {};
    Key key{idx.sign, idx.offset, al.key()};
    auto& c = cache();
    {
        std::shared_lock lock(c.mu);
        auto it = c.table.find(key);
        if (it != c.table.end() && static_cast<int>(it->second.size()) > n) return it->second[n];
    }
    std::unique_lock lock(c.mu);
    auto& seq = c.table[key];
    const AlphaPoly p = idx.value(al);
    const XPoly x = XPoly::x();
    if (seq.empty()) seq.emplace_back(AlphaPoly(1));
    if (seq.size() == 1) seq.push_back(XPoly(p + AlphaPoly(1)) - x);
    // (k+1) L_{k+1} = (2k+1+p-x) L_k - (k+p) L_{k-1}
    while (static_cast<int>(seq.size()) <= n) {
        int k = static_cast<int>(seq.size()) - 1;
        XPoly next = (XPoly(p + AlphaPoly(2 * k + 1)) - x) * seq[k] - seq[k - 1] * (p + AlphaPoly(k));
        next *= AlphaPoly(Rational(1, k + 1));
        seq.push_back(std::move(next));
    }
    return seq[n];
}

XPoly laguerre_reflected(int n, LaguerreIndex idx, const Alpha& al) { return laguerre(n, idx, al).reflect(); }

void clear_laguerre_cache() {
    auto& c = cache();
    std::unique_lock lock(c.mu);
    c.table.clear();
}

bool laguerre_derivative_identity_check(int n, LaguerreIndex idx) {
    if (n < 0) throw DegreeNotAdmissible("derivative identities need n >= 0");
    const XPoly x = XPoly::x();
    XPoly l = laguerre(n, idx);
    XPoly up = laguerre(n - 1, idx.shifted(1));
    bool plain = l.diff() == -up;
    bool reflected = l.reflect().diff() == up.reflect();
    XPoly y = l.reflect();
    XPoly ode = x * y.diff().diff() + (XPoly(idx.value() + AlphaPoly(1)) + x) * y.diff() - XPoly(AlphaPoly(n)) * y;
    return plain && reflected && ode.is_zero();
}

bool laguerre_three_point_identities(int n, LaguerreIndex idx) {
    if (n < 1) throw DegreeNotAdmissible("three-point identities need n >= 1");
    const XPoly x = XPoly::x();
    XPoly l = laguerre(n, idx);
    XPoly lower = laguerre(n - 1, idx);
    XPoly lhs = x * l.diff();
    XPoly rhs = l * AlphaPoly(n) - lower * (idx.value() + AlphaPoly(n));
    bool first = lhs == rhs;
    bool second = l == laguerre(n, idx.shifted(1)) - laguerre(n - 1, idx.shifted(1));
    return first && second;
}

double classical_norm(int n, double a) {
    if (!(a > -1.0)) throw DomainError("classical norm needs a > -1");
    if (n < 0) throw DegreeNotAdmissible("classical norm needs n >= 0");
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    return gamma_fn(n + a + 1.0) / fact;
}

} // namespace xlag
