#pragma once

// Principal-series Whittaker function: the normalized double Bessel-K
// integral on A+, the Gamma-product unnormalization, evaluation at general
// arguments through the Iwasawa decomposition, and a direct 4-dimensional
// quadrature of the defining U(R) integral used as an independent oracle.

#include <array>

#include "gsp4/iwasawa.hpp"
#include "gsp4/roots.hpp"

namespace gsp4 {

/// Normalized Whittaker function (entire in nu):
///   Wn(nu, a) = 2 a1 a2^2 \int\int K_{(nu2-nu1)/2}(2 pi v1) K_{(nu1+nu2)/2}(2 pi v2)
///               exp(-pi(a2^2/(v1 v2) + v1 v2/a1^2 + a1^2(v1/v2 + v2/v1))) dv/(v1 v2)
cplx whittaker_normalized(const SpectralParam& nu, const APoint& a, double rel_tol = 1e-8);

/// W = 4 pi^2 Wn / prod_{alpha > 0} Gamma(1/2 + <nu, alpha0>).
/// Throws GammaPole when a factor is at a pole.
cplx whittaker_unnormalized(const SpectralParam& nu, const APoint& a, double rel_tol = 1e-8);

/// Reduce a diagonal with positive ratio pattern to A+ modulo the centre and
/// the sign elements of K_inf. Throws DomainError when impossible.
APoint reduce_diag_to_apoint(const std::array<double, 4>& d);

/// W at a general argument with positive multiplier, for the character
/// u(x,a,b,c) -> e(mx x + mc c): central reduction, Iwasawa, phase * W(A+).
cplx whittaker_general(const SpectralParam& nu, const Md4& g, double mx, double mc,
                       double rel_tol = 1e-8);

/// Direct quadrature of int_U e^{(rho+nu)(A(J u g))} e(-(mx x + mc c)) du
/// (plain Lebesgue du); absolutely convergent for Re(nu) inside the cone.
cplx whittaker_jacquet_direct(const SpectralParam& nu, const Md4& g, double mx,
                              double mc, int n_nodes = 48);

} // namespace gsp4
