#include "xlag/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace xlag {

namespace {

using Vec = std::vector<double>;

// 15-point Kronrod nodes on [-1, 1] (non-negative half) with the embedded
// 7-point Gauss weights on the odd entries.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kKronrod[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGauss[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                              0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

Vec tolerances(const Vec& value, const QuadratureOptions& opt, double abs_tol, const ToleranceScale& scale) {
    Vec s = scale ? scale(value) : value;
    Vec tol(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) tol[i] = std::max(abs_tol, opt.rel_tol * std::abs(s[i]));
    return tol;
}

struct Panel {
    double lo, hi;
    Vec value, error;
    double priority;
    bool operator<(const Panel& o) const { return priority < o.priority; }
};

// One Gauss-Kronrod panel for g on (lo, hi).
void kronrod_panel(const VectorIntegrand& g, std::size_t dim, Panel& p) {
    double c = (p.lo + p.hi) / 2, h = (p.hi - p.lo) / 2;
    Vec fa(dim), fb(dim);
    Vec k(dim, 0.0), gs(dim, 0.0);
    g(c, fa);
    for (std::size_t i = 0; i < dim; ++i) {
        k[i] = kKronrod[7] * fa[i];
        gs[i] = kGauss[3] * fa[i];
    }
    for (int j = 0; j < 7; ++j) {
        g(c - h * kNodes[j], fa);
        g(c + h * kNodes[j], fb);
        for (std::size_t i = 0; i < dim; ++i) {
            double s = fa[i] + fb[i];
            k[i] += kKronrod[j] * s;
            if (j % 2 == 1) gs[i] += kGauss[j / 2] * s;
        }
    }
    p.value.assign(dim, 0.0);
    p.error.assign(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        p.value[i] = k[i] * h;
        p.error[i] = std::abs((k[i] - gs[i]) * h);
    }
}

// Globally adaptive bisection of the panel with the worst error relative to
// its component tolerance.
std::vector<QuadratureResult> kronrod_adaptive(const VectorIntegrand& g, std::size_t dim, double lo,
                                               double hi, const QuadratureOptions& opt, double abs_tol,
                                               const ToleranceScale& scale) {
    std::priority_queue<Panel> heap;
    Panel first{lo, hi, {}, {}, 0};
    kronrod_panel(g, dim, first);
    Vec total = first.value, err = first.error;
    heap.push(first);
    int panels = 1;
    auto worst = [&](const Panel& p, const Vec& tol) {
        double w = 0;
        for (std::size_t i = 0; i < dim; ++i) w = std::max(w, p.error[i] / tol[i]);
        return w;
    };
    bool ok = false;
    while (true) {
        Vec tol = tolerances(total, opt, abs_tol, scale);
        ok = true;
        for (std::size_t i = 0; i < dim; ++i)
            if (err[i] > tol[i]) ok = false;
        if (ok || panels >= opt.max_subdivisions) break;
        // Priorities go stale as tolerances move; refresh lazily on pop.
        Panel p = heap.top();
        heap.pop();
        double fresh = worst(p, tol);
        if (!heap.empty() && fresh < heap.top().priority) {
            p.priority = fresh;
            heap.push(p);
            continue;
        }
        double mid = (p.lo + p.hi) / 2;
        Panel left{p.lo, mid, {}, {}, 0}, right{mid, p.hi, {}, {}, 0};
        kronrod_panel(g, dim, left);
        kronrod_panel(g, dim, right);
        for (std::size_t i = 0; i < dim; ++i) {
            total[i] += left.value[i] + right.value[i] - p.value[i];
            err[i] += left.error[i] + right.error[i] - p.error[i];
        }
        left.priority = worst(left, tol);
        right.priority = worst(right, tol);
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    // Re-sum to shed accumulated rounding from the running updates.
    std::fill(total.begin(), total.end(), 0.0);
    std::fill(err.begin(), err.end(), 0.0);
    while (!heap.empty()) {
        const Panel& p = heap.top();
        for (std::size_t i = 0; i < dim; ++i) {
            total[i] += p.value[i];
            err[i] += p.error[i];
        }
        heap.pop();
    }
    Vec tol = tolerances(total, opt, abs_tol, scale);
    std::vector<QuadratureResult> out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = {total[i], err[i], panels, err[i] <= tol[i]};
    return out;
}

// Tanh-sinh on (0, b) with nodes x = b / (1 + exp(-2s)), s = (pi/2) sinh t,
// computed so that points near the origin keep full relative accuracy.
std::vector<QuadratureResult> tanh_sinh(const VectorIntegrand& f, std::size_t dim, double b,
                                        const QuadratureOptions& opt, double abs_tol,
                                        const ToleranceScale& scale) {
    constexpr double kTmax = 6.1;  // x ~ 1e-300 at the left end
    const double half_pi = std::numbers::pi / 2;
    Vec fx(dim), sum(dim, 0.0), edge(dim, 0.0);
    auto add = [&](double t, Vec& acc) {
        double s = half_pi * std::sinh(t);
        double cs = std::cosh(s);
        double w = half_pi * std::cosh(t) / (2 * cs * cs) * b;
        if (w == 0) return;
        double x = b / (1 + std::exp(-2 * s));
        if (x <= 0 || x >= b) return;
        f(x, fx);
        for (std::size_t i = 0; i < dim; ++i) acc[i] += w * fx[i];
    };
    double h = 0.5;
    int nmax = static_cast<int>(kTmax / h);
    for (int k = -nmax; k <= nmax; ++k) add(k * h, sum);
    Vec value(dim), prev(dim), err(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) value[i] = sum[i] * h;
    // Size of the outermost terms bounds the truncation of the t-range.
    add(-kTmax, edge);
    add(kTmax, edge);
    bool ok = false;
    int level = 0;
    for (; level < opt.max_level; ++level) {
        prev = value;
        h /= 2;
        nmax = static_cast<int>(kTmax / h);
        for (int k = -nmax + 1; k <= nmax; k += 2) add(k * h, sum);
        for (std::size_t i = 0; i < dim; ++i) value[i] = sum[i] * h;
        Vec tol = tolerances(value, opt, abs_tol, scale);
        ok = true;
        for (std::size_t i = 0; i < dim; ++i) {
            err[i] = std::abs(value[i] - prev[i]) + std::abs(edge[i]) * h;
            if (err[i] > tol[i]) ok = false;
        }
        if (ok && level >= 1) break;
    }
    Vec tol = tolerances(value, opt, abs_tol, scale);
    std::vector<QuadratureResult> out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = {value[i], err[i], level + 1, err[i] <= tol[i]};
    return out;
}

VectorIntegrand lift(const std::function<double(double)>& f) {
    return [f](double x, Vec& out) { out[0] = f(x); };
}

} // namespace

std::vector<QuadratureResult> integrate_half_line(const VectorIntegrand& f, std::size_t dim,
                                                  const QuadratureOptions& opt, const ToleranceScale& scale) {
    // Each piece gets half of the budget so that the sum meets it.
    QuadratureOptions half = opt;
    half.rel_tol /= 2;
    auto head = tanh_sinh(f, dim, 1.0, half, opt.abs_tol / 2, scale);
    VectorIntegrand tail = [&](double t, Vec& out) {
        double u = 1 - t;
        if (u <= 0) {
            std::fill(out.begin(), out.end(), 0.0);
            return;
        }
        f(1 + t / u, out);
        double jac = 1 / (u * u);
        for (auto& v : out) v *= jac;
    };
    auto rest = kronrod_adaptive(tail, dim, 0.0, 1.0, half, opt.abs_tol / 2, scale);
    Vec total(dim);
    for (std::size_t i = 0; i < dim; ++i) total[i] = head[i].value + rest[i].value;
    Vec tol = tolerances(total, opt, opt.abs_tol, scale);
    std::vector<QuadratureResult> out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        double e = head[i].error_estimate + rest[i].error_estimate;
        out[i] = {total[i], e, head[i].subdivisions + rest[i].subdivisions, e <= tol[i]};
    }
    return out;
}

QuadratureResult integrate_half_line(const std::function<double(double)>& f, const QuadratureOptions& opt) {
    return integrate_half_line(lift(f), 1, opt)[0];
}

QuadratureResult integrate_from_zero(const std::function<double(double)>& f, double b,
                                     const QuadratureOptions& opt) {
    return tanh_sinh(lift(f), 1, b, opt, opt.abs_tol, {})[0];
}

QuadratureResult integrate_interval(const std::function<double(double)>& f, double lo, double hi,
                                    const QuadratureOptions& opt) {
    return kronrod_adaptive(lift(f), 1, lo, hi, opt, opt.abs_tol, {})[0];
}

} // namespace xlag
