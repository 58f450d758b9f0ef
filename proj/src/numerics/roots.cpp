#include "xlag/numerics/roots.hpp"

#include "xlag/core/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace xlag {

namespace {

struct Cx {
    mpf_class re;
    mpf_class im;
};

class Aberth {
public:
    Aberth(const RealPoly& p, unsigned long prec) : prec_(prec), n_(p.degree()) {
        for (const auto& q : p.exact()) {
            mpf_class c(0, prec_);
            c = q;
            coef_.push_back(c);
        }
        for (int i = 0; i < n_; ++i) dcoef_.push_back(mpf_class(coef_[i + 1] * (i + 1), prec_));
    }

    // Horner for p and p' at z.
    void eval(const Cx& z, Cx& pv, Cx& dv) {
        horner(coef_, z, pv);
        horner(dcoef_, z, dv);
    }

    void horner(const std::vector<mpf_class>& c, const Cx& z, Cx& out) {
        out.re = 0;
        out.im = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            // out = out * z + c
            t1_ = out.re * z.re;
            t1_ -= out.im * z.im;
            t2_ = out.re * z.im;
            t2_ += out.im * z.re;
            out.re = t1_ + *it;
            out.im = t2_;
        }
    }

    unsigned long prec() const { return prec_; }

private:
    unsigned long prec_;
    int n_;
    std::vector<mpf_class> coef_, dcoef_;
    mpf_class t1_{0, prec_}, t2_{0, prec_};
};

void cdiv(const Cx& a, const Cx& b, Cx& out, unsigned long prec) {
    mpf_class den(b.re * b.re + b.im * b.im, prec);
    mpf_class re(a.re * b.re + a.im * b.im, prec);
    mpf_class im(a.im * b.re - a.re * b.im, prec);
    out.re = re / den;
    out.im = im / den;
}

double mag(const Cx& z) {
    double re = z.re.get_d(), im = z.im.get_d();
    return std::hypot(re, im);
}

int sign_of(const mpf_class& v) { return sgn(v); }

mpf_class mpf_min(const mpf_class& a, const mpf_class& b) { return a < b ? a : b; }

} // namespace

std::vector<std::complex<double>> companion_roots(const std::vector<double>& coeffs) {
    int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1) return {};
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) c(i, n - 1) = -coeffs[i] / coeffs[n];
    // EigenSolver balances internally through its Hessenberg reduction; an
    // explicit diagonal scaling by powers of two keeps the entries moderate.
    Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
    for (int sweep = 0; sweep < 8; ++sweep) {
        for (int i = 0; i < n; ++i) {
            double r = 0, s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    r += std::abs(c(i, j));
                    s += std::abs(c(j, i));
                }
            if (r == 0 || s == 0) continue;
            int e = 0;
            std::frexp(std::sqrt(r / s), &e);
            double f = std::ldexp(1.0, e);
            c.row(i) /= f;
            c.col(i) *= f;
        }
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

RootSet all_roots(const RealPoly& p, double tol) {
    const int n = p.degree();
    if (n < 1) throw DomainError("root finding needs degree >= 1");
    const unsigned long prec = 128 + 8 * static_cast<unsigned long>(n);
    Aberth ab(p, prec);

    // Starting points: companion eigenvalues where finite, nudged apart.
    std::vector<std::complex<double>> init = companion_roots(p.coeffs());
    double bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(p.coeffs()[i] / p.coeffs()[n]));
    bound = 1 + bound;
    std::vector<Cx> z(n, Cx{mpf_class(0, prec), mpf_class(0, prec)});
    for (int i = 0; i < n; ++i) {
        std::complex<double> s = init[i];
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
            double th = 2 * std::numbers::pi * (i + 0.25) / n;
            s = std::polar(std::min(bound, 1e6), th);
        }
        // Small asymmetric offsets keep conjugate and coincident seeds apart.
        s += std::complex<double>(1e-7 * (i + 1), 1e-6 * std::cos(1.0 + i)) * (1.0 + std::abs(s));
        z[i].re = mpf_class(s.real(), prec);
        z[i].im = mpf_class(s.imag(), prec);
    }

    Cx pv{mpf_class(0, prec), mpf_class(0, prec)}, dv = pv, ratio = pv, w = pv, diff = pv, inv = pv;
    mpf_class sre(0, prec), sim(0, prec), one(1, prec);
    const Cx unit{one, mpf_class(0, prec)};
    const double stop = std::ldexp(1.0, -static_cast<int>(std::min<unsigned long>(prec / 2, 1000)));
    int iter = 0;
    const int max_iter = 500;
    std::vector<char> done(n, 0);
    for (; iter < max_iter; ++iter) {
        bool all_done = true;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            ab.eval(z[i], pv, dv);
            if (sgn(pv.re) == 0 && sgn(pv.im) == 0) {
                done[i] = 1;
                continue;
            }
            cdiv(pv, dv, ratio, prec);
            sre = 0;
            sim = 0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                diff.re = z[i].re - z[j].re;
                diff.im = z[i].im - z[j].im;
                cdiv(unit, diff, inv, prec);
                sre += inv.re;
                sim += inv.im;
            }
            // w = ratio / (1 - ratio * s)
            Cx den{mpf_class(one - (ratio.re * sre - ratio.im * sim), prec),
                   mpf_class(-(ratio.re * sim + ratio.im * sre), prec)};
            cdiv(ratio, den, w, prec);
            z[i].re -= w.re;
            z[i].im -= w.im;
            double step = mag(w), size = mag(z[i]);
            if (step <= stop * (1.0 + size))
                done[i] = 1;
            else
                all_done = false;
        }
        if (all_done) break;
    }
    if (iter == max_iter) throw ConvergenceFailure("root iteration did not converge (degree " + std::to_string(n) + ")");

    RootSet rs;
    rs.iterations = iter + 1;
    std::vector<std::pair<mpf_class, int>> real_idx;
    for (int i = 0; i < n; ++i) {
        double re = z[i].re.get_d(), im = z[i].im.get_d();
        double scale = std::max(1.0, std::abs(re));
        if (std::abs(im) <= std::max(1e-3 * tol, 1e-20) * scale)
            real_idx.emplace_back(z[i].re, i);
        else
            rs.complex.emplace_back(re, im);
    }
    std::sort(real_idx.begin(), real_idx.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    // Sign-change certification of each real root on a bracket that lies
    // strictly inside the gaps to its neighbours.
    bool ok = true;
    mpf_class lo(0, prec), hi(0, prec), gap(0, prec), delta(0, prec);
    for (std::size_t k = 0; k < real_idx.size(); ++k) {
        const mpf_class& r = real_idx[k].first;
        mpf_class g(abs(r) + 1, prec);
        if (k > 0) g = mpf_min(g, mpf_class(r - real_idx[k - 1].first, prec));
        if (k + 1 < real_idx.size()) g = mpf_min(g, mpf_class(real_idx[k + 1].first - r, prec));
        for (const auto& c : rs.complex) g = mpf_min(g, mpf_class(std::abs(std::complex<double>(r.get_d(), 0) - c), prec));
        delta = g / 4;
        mpf_class cap(abs(r) + 1, prec);
        cap *= tol;
        if (delta > cap) delta = cap;
        lo = r - delta;
        hi = r + delta;
        if (sign_of(p.eval_mpf(lo)) * sign_of(p.eval_mpf(hi)) >= 0) ok = false;
        if (k > 0 && real_idx[k].first - real_idx[k - 1].first <= 0) ok = false;
        rs.real.push_back(r.get_d());
    }
    std::sort(rs.complex.begin(), rs.complex.end(),
              [](auto a, auto b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); });
    rs.certified = ok && static_cast<int>(rs.real.size() + rs.complex.size()) == n;
    if (!ok) throw ConvergenceFailure("real roots could not be certified by sign changes");
    return rs;
}

std::vector<double> real_roots(const RealPoly& p, double tol) { return all_roots(p, tol).real; }

int descartes_bound(const RealPoly& p, double lo, double hi) {
    if (!(hi > lo)) throw DomainError("descartes_bound needs lo < hi");
    const int n = p.degree();
    if (n < 1) return 0;
    const unsigned long prec = 2 * p.precision_bits() + 64;
    std::vector<mpf_class> c;
    for (const auto& q : p.exact()) {
        mpf_class v(0, prec);
        v = q;
        c.push_back(v);
    }
    mpf_class l(lo, prec), w(hi - lo, prec);
    w = mpf_class(hi, prec) - l;
    // r(s) = p(lo + w s): Taylor shift by lo, then scale.
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) c[j] += l * c[j + 1];
    mpf_class pw(1, prec);
    for (int i = 0; i <= n; ++i) {
        c[i] *= pw;
        pw *= w;
    }
    std::reverse(c.begin(), c.end());
    // Taylor shift by 1.
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) c[j] += c[j + 1];
    int changes = 0, last = 0;
    for (const auto& v : c) {
        int s = sgn(v);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::vector<double> leading_positive_roots(const RealPoly& p, int count, double hi, double step) {
    if (!(step > 0) || !(hi > 0)) throw DomainError("positive root scan needs positive hi and step");
    const unsigned long prec = p.precision_bits();
    mpf_class a(0, prec), b(0, prec), mid(0, prec);
    int s0 = sgn(p.eval_mpf(mpf_class(0, prec)));
    if (s0 == 0) throw DomainError("polynomial vanishes at the origin");
    std::vector<double> roots;
    double x = 0;
    while (x < hi && static_cast<int>(roots.size()) < count) {
        double nx = x + step;
        int s1 = sgn(p.eval_mpf(mpf_class(nx, prec)));
        if (s1 == 0) {
            roots.push_back(nx);
            x = nx + step / 2;
            s0 = sgn(p.eval_mpf(mpf_class(x, prec)));
            continue;
        }
        if (s1 != s0) {
            a = x;
            b = nx;
            for (int it = 0; it < 200; ++it) {
                mid = (a + b) / 2;
                int sm = sgn(p.eval_mpf(mid));
                if (sm == 0) {
                    a = b = mid;
                    break;
                }
                if (sm == s0)
                    a = mid;
                else
                    b = mid;
                if (mpf_class(b - a).get_d() <= 1e-17 * b.get_d()) break;
            }
            if (roots.empty()) {
                // No root may hide below the first one found.
                double below = a.get_d();
                if (below > 0 && descartes_bound(p, 0.0, below) != 0)
                    throw ConvergenceFailure("a smaller positive root could not be excluded");
            }
            roots.push_back(mpf_class((a + b) / 2).get_d());
            s0 = s1;
        }
        x = nx;
    }
    if (static_cast<int>(roots.size()) < count)
        throw ConvergenceFailure("only " + std::to_string(roots.size()) + " sign changes found below " +
                                 std::to_string(hi));
    return roots;
}

double smallest_positive_root(const RealPoly& p, double hi, double step) {
    return leading_positive_roots(p, 1, hi, step).front();
}

} // namespace xlag
