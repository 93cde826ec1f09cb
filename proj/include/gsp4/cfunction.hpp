#pragma once

// Harish-Chandra c-function (Gamma-product continuation normalized so that
// c(rho) = 1), the Plancherel density through both of its routes, and the
// 4-dimensional numeric evaluation of the defining integral over U(R).

#include "gsp4/roots.hpp"

namespace gsp4 {

/// c(nu) = C0 * prod_{alpha > 0} Gamma(<nu,a0>) / Gamma(1/2 + <nu,a0>),
/// with C0 fixed by c(rho) = 1. Throws GammaPole at poles.
cplx harish_chandra_c(const SpectralParam& nu);

/// Plancherel density at real nu: the tanh-product route.
double plancherel_density(double nu1, double nu2);

/// The same density through 1 / (c(i nu) c(-i nu)).
cplx plancherel_via_c(double nu1, double nu2);

/// Numeric c(nu) = Z(nu)/Z(rho) with Z(nu) = int_{R^4} e^{(nu+rho)(A(Ju))} du
/// (Lebesgue measure; the ratio realizes the c(rho) = 1 normalization).
/// Requires real nu in the open positivity cone 0 < nu1 < nu2.
double c_integral_numeric(double nu1, double nu2, int n_nodes = 48);

/// Cached Z(rho) (plain Lebesgue value), the normalization of du on U(R).
double haar_u_normalization(int n_nodes = 48);

} // namespace gsp4
