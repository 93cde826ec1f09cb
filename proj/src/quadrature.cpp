#include "gsp4/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "gsp4/errors.hpp"

namespace gsp4 {

namespace {

// 15-point Kronrod nodes (positive half) and weights, with the embedded
// 7-point Gauss weights on the odd-index nodes.
constexpr double kKronrodX[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussW[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelResult {
    cplx k15;
    double err;
};

PanelResult gk_panel(const std::function<cplx(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kKronrodX[i]);
        fv[14 - i] = f(c + h * kKronrodX[i]);
    }
    fv[7] = f(c);
    cplx k15 = kKronrodW[7] * fv[7];
    for (int i = 0; i < 7; ++i) k15 += kKronrodW[i] * (fv[i] + fv[14 - i]);
    cplx g7 = kGaussW[3] * fv[7];
    for (int i = 0; i < 3; ++i) g7 += kGaussW[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    k15 *= h;
    g7 *= h;
    double err = std::abs(k15 - g7);
    return {k15, err};
}

cplx gk_recurse(const std::function<cplx(double)>& f, double a, double b,
                double tol, int depth, int max_depth, bool& ok) {
    PanelResult r = gk_panel(f, a, b);
    if (r.err <= tol || depth >= max_depth) {
        if (r.err > tol) ok = false;
        return r.k15;
    }
    double c = 0.5 * (a + b);
    return gk_recurse(f, a, c, 0.5 * tol, depth + 1, max_depth, ok) +
           gk_recurse(f, c, b, 0.5 * tol, depth + 1, max_depth, ok);
}

} // namespace

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    GaussRule r;
    r.x.resize(static_cast<size_t>(n));
    r.w.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev estimate
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[static_cast<size_t>(n - 1 - i)] = x;
        r.w[static_cast<size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

cplx integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                  double abs_tol, double rel_tol, int max_depth) {
    PanelResult first = gk_panel(f, a, b);
    double tol = std::max(abs_tol, rel_tol * std::abs(first.k15));
    if (first.err <= tol) return first.k15;
    bool ok = true;
    cplx v = gk_recurse(f, a, b, tol, 0, max_depth, ok);
    if (!ok) throw QuadratureFailure("integrate_gk: tolerance not reached");
    return v;
}

cplx integrate_gl(const std::function<cplx(double)>& f, double a, double b, int n) {
    const GaussRule& r = gauss_legendre(n);
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx acc = 0.0;
    for (int i = 0; i < n; ++i) acc += r.w[static_cast<size_t>(i)] * f(c + h * r.x[static_cast<size_t>(i)]);
    return acc * h;
}

NodeSet sinh_panel_nodes(double T, double split, int n_central, int n_tail) {
    NodeSet out;
    auto add = [&](double lo, double hi, int m) {
        const GaussRule& g = gauss_legendre(m);
        double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        for (int i = 0; i < m; ++i) {
            double t = c + h * g.x[static_cast<size_t>(i)];
            out.x.push_back(std::sinh(t));
            out.w.push_back(h * g.w[static_cast<size_t>(i)] * std::cosh(t));
        }
    };
    add(-T, -split, n_tail);
    add(-split, split, n_central);
    add(split, T, n_tail);
    return out;
}

} // namespace gsp4
