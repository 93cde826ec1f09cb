#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace gsp4 {

using cplx = std::complex<double>;

/// Gauss-Legendre nodes/weights on [-1, 1]; cached per order.
struct GaussRule {
    std::vector<double> x, w;
};
const GaussRule& gauss_legendre(int n);

/// Adaptive Gauss-Kronrod (G7, K15) on [a, b].
/// Throws QuadratureFailure if the tolerance cannot be met.
cplx integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                  double abs_tol, double rel_tol, int max_depth = 15);

/// Fixed-order Gauss-Legendre integral on [a, b].
cplx integrate_gl(const std::function<cplx(double)>& f, double a, double b, int n);

/// Nodes/weights for int_R f(x) dx under x = sinh(t), t in [-T, T], with a
/// dense central panel |t| <= split and two tail panels.
struct NodeSet {
    std::vector<double> x, w;
};
NodeSet sinh_panel_nodes(double T, double split, int n_central, int n_tail);

} // namespace gsp4
