#include "xlag/numerics/orthogonality.hpp"

#include "xlag/classical/gamma.hpp"
#include "xlag/core/error.hpp"
#include "xlag/exceptional/polynomials.hpp"
#include "xlag/ode/weight.hpp"

#include <cmath>
#include <sstream>

namespace xlag {

namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

std::string describe(const QuadratureResult& r) {
    std::ostringstream os;
    os << "quadrature error estimate " << r.error_estimate << " after " << r.subdivisions << " subdivisions";
    return os.str();
}

} // namespace

RealPoly exceptional_at(Family f, int m, int n, double a) {
    DegreeSet(f, m).require(n);
    Rational av = from_double(a);
    return substitute_alpha(exceptional(f, m, n, Alpha::at(av)), av, {family_name(f), m, n});
}

QuadratureResult inner_product(Family f, int m, double a, const RealPoly& p, const RealPoly& q,
                               const QuadratureOptions& opt) {
    WeightSpec w(f, m, a);
    if (p.is_zero() || q.is_zero()) return {0.0, 0.0, 0, true};
    auto r = integrate_half_line(
        [&](double x) {
            double wx = w(x);
            return wx == 0 ? 0.0 : p.eval(x) * q.eval(x) * wx;
        },
        opt);
    if (!r.converged) throw ToleranceNotMet("inner product: " + describe(r));
    return r;
}

double norm_closed_form(Family f, int m, int n, double a) {
    require_alpha(f, m, a);
    DegreeSet(f, m).require(n);
    switch (f) {
    case Family::TypeI: return (a + n) * gamma_fn(a + n - m) / factorial(n - m);
    case Family::TypeII: return (a + 1 + n - 2 * m) * gamma_fn(a + 2 + n - m) / factorial(n - m);
    case Family::TypeIII:
        if (n == 0) return gamma_fn(a + 1) * gamma_fn(-a) * factorial(m) / gamma_fn(m - a);
        return n * gamma_fn(n - m + a + 1) / factorial(n - m - 1);
    }
    return 0;
}

GramReport gram_matrix(Family f, int m, double a, const std::vector<int>& degrees, double tol,
                       const QuadratureOptions& opt) {
    WeightSpec w(f, m, a);
    GramReport rep;
    rep.degrees = degrees;
    const std::size_t d = degrees.size();
    std::vector<RealPoly> polys;
    for (int n : degrees) {
        polys.push_back(exceptional_at(f, m, n, a));
        rep.closed_form.push_back(norm_closed_form(f, m, n, a));
    }
    // Packed upper triangle, row by row.
    auto index = [d](std::size_t i, std::size_t j) { return i * d - i * (i - 1) / 2 + (j - i); };
    std::vector<double> vals(d);
    VectorIntegrand integrand = [&](double x, std::vector<double>& out) {
        double wx = w(x);
        if (wx == 0) {
            std::fill(out.begin(), out.end(), 0.0);
            return;
        }
        for (std::size_t i = 0; i < d; ++i) vals[i] = polys[i].eval(x);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) out[index(i, j)] = vals[i] * vals[j] * wx;
    };
    // Off-diagonal entries are judged against sqrt(G_ii G_jj).
    ToleranceScale scale = [&](const std::vector<double>& v) {
        std::vector<double> s(v.size());
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j)
                s[index(i, j)] = std::sqrt(std::abs(v[index(i, i)] * v[index(j, j)]));
        return s;
    };
    auto res = integrate_half_line(integrand, d * (d + 1) / 2, opt, scale);
    rep.matrix.assign(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            const auto& r = res[index(i, j)];
            if (!r.converged) throw ToleranceNotMet("gram matrix entry: " + describe(r));
            rep.matrix[i][j] = rep.matrix[j][i] = r.value;
        }
    for (std::size_t i = 0; i < d; ++i) {
        double e = std::abs(rep.matrix[i][i] - rep.closed_form[i]) / std::abs(rep.closed_form[i]);
        rep.diagonal_error.push_back(e);
        rep.max_diagonal_error = std::max(rep.max_diagonal_error, e);
        for (std::size_t j = i + 1; j < d; ++j)
            rep.max_off_diagonal = std::max(
                rep.max_off_diagonal, std::abs(rep.matrix[i][j]) / std::sqrt(rep.matrix[i][i] * rep.matrix[j][j]));
    }
    rep.pass = rep.max_diagonal_error < tol && rep.max_off_diagonal < tol;
    return rep;
}

} // namespace xlag
