#include "xlag/numerics/interlacing.hpp"

#include "xlag/classical/laguerre.hpp"
#include "xlag/core/error.hpp"
#include "xlag/exceptional/polynomials.hpp"
#include "xlag/numerics/bessel.hpp"
#include "xlag/numerics/orthogonality.hpp"
#include "xlag/numerics/roots.hpp"

#include <cmath>
#include <limits>

namespace xlag {

namespace {

std::vector<double> reals_of(const XPoly& p, const Rational& av) {
    RealPoly r = substitute_alpha(p, av);
    if (r.degree() < 1) return {};
    return all_roots(r).real;
}

int count_in(const std::vector<double>& xs, double lo, double hi) {
    int c = 0;
    for (double x : xs)
        if (x > lo && x < hi) ++c;
    return c;
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1])) return false;
    return true;
}

} // namespace

RootReport interlacing_check(int m, int k, double a, double tol) {
    if (m < 1 || k < 1) throw DomainError("interlacing_check needs m, k >= 1");
    require_alpha(Family::TypeIII, m, a);
    RootReport rep;
    rep.m = m;
    rep.k = k;
    rep.a = a;
    Rational av = from_double(a);
    Alpha al = Alpha::at(av);

    RootSet rs = all_roots(substitute_alpha(xlag3(m, m + k, al), av), tol);
    for (double r : rs.real) (r > 0 ? rep.positive_roots : rep.negative_roots).push_back(r);
    rep.complex_roots = rs.complex;
    rep.reference_positive = reals_of(laguerre(k - 1, plus_alpha(1), al), av);
    rep.reference_negative = reals_of(laguerre_reflected(m, minus_alpha(-1), al), av);

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> pe{0.0};
    pe.insert(pe.end(), rep.reference_positive.begin(), rep.reference_positive.end());
    pe.push_back(inf);
    for (std::size_t i = 0; i + 1 < pe.size(); ++i)
        rep.positive_intervals.push_back(count_in(rep.positive_roots, pe[i], pe[i + 1]) == 1);
    std::vector<double> ne{-inf};
    ne.insert(ne.end(), rep.reference_negative.begin(), rep.reference_negative.end());
    for (std::size_t i = 0; i + 1 < ne.size(); ++i)
        rep.negative_intervals.push_back(count_in(rep.negative_roots, ne[i], ne[i + 1]) == 1);

    rep.counts_ok = static_cast<int>(rep.positive_roots.size()) == k &&
                    static_cast<int>(rep.negative_roots.size()) == m && rep.complex_roots.empty();
    rep.simple = true;
    for (std::size_t i = 1; i < rs.real.size(); ++i)
        if (rs.real[i] - rs.real[i - 1] <= 1e2 * tol * std::max(1.0, std::abs(rs.real[i]))) rep.simple = false;

    bool intervals = static_cast<int>(rep.positive_intervals.size()) == k &&
                     static_cast<int>(rep.negative_intervals.size()) == m;
    for (bool b : rep.positive_intervals) intervals = intervals && b;
    for (bool b : rep.negative_intervals) intervals = intervals && b;
    rep.pass = rep.counts_ok && rep.simple && intervals;
    return rep;
}

AsymptoticsTable asymptotics_probe(Family f, int m, double a, const std::vector<int>& ks) {
    if (f == Family::TypeII) throw DomainError("asymptotics_probe covers Types I and III");
    require_alpha(f, m, a);
    for (std::size_t i = 1; i < ks.size(); ++i)
        if (ks[i] <= ks[i - 1]) throw DomainError("asymptotics_probe needs increasing k");
    AsymptoticsTable tab;
    tab.family = f;
    tab.m = m;
    tab.a = a;
    Rational av = from_double(a);
    Alpha al = Alpha::at(av);

    if (f == Family::TypeIII) {
        std::vector<double> target = reals_of(laguerre_reflected(m, minus_alpha(-1), al), av);
        std::vector<double> dist, first;
        for (int k : ks) {
            RootSet rs = all_roots(substitute_alpha(xlag3(m, m + k, al), av));
            std::vector<double> neg, pos;
            for (double r : rs.real) (r < 0 ? neg : pos).push_back(r);
            if (neg.size() != target.size() || pos.empty())
                throw ConvergenceFailure("unexpected root pattern at k = " + std::to_string(k));
            AsymptoticsRow row;
            row.k = k;
            for (std::size_t i = 0; i < neg.size(); ++i)
                row.exceptional_distance = std::max(row.exceptional_distance, std::abs(neg[i] - target[i]));
            row.first_positive_root = pos.front();
            dist.push_back(row.exceptional_distance);
            first.push_back(row.first_positive_root);
            tab.rows.push_back(row);
        }
        tab.trends = {{"exceptional_distance", strictly_decreasing(dist)},
                      {"first_positive_root", strictly_decreasing(first)}};
    } else {
        std::vector<double> limit;
        for (int i = 1; i <= 3; ++i) {
            double j = bessel_zero(a, i);
            limit.push_back(j * j / 4);
        }
        std::vector<std::vector<double>> cols(3);
        for (int k : ks) {
            RealPoly p = exceptional_at(Family::TypeI, m, m + k, a);
            // The third zero sits near j_3^2 / (4k); scan a little past it
            // with a step well below the root spacing.
            double hi = 2.0 * limit[2] / k + 1.0;
            double step = limit[0] / k / 50;
            std::vector<double> xs = leading_positive_roots(p, 3, hi, step);
            AsymptoticsRow row;
            row.k = k;
            for (int i = 0; i < 3; ++i) {
                double gap = std::abs(k * xs[i] - limit[i]);
                row.scaled_root_gap.push_back(gap);
                row.scaled_root_relative.push_back(gap / limit[i]);
                cols[i].push_back(gap);
            }
            tab.rows.push_back(row);
        }
        for (int i = 0; i < 3; ++i)
            tab.trends.emplace_back("scaled_root_gap_" + std::to_string(i + 1), strictly_decreasing(cols[i]));
    }
    tab.all_decreasing = true;
    for (const auto& t : tab.trends) tab.all_decreasing = tab.all_decreasing && t.second;
    return tab;
}

} // namespace xlag
