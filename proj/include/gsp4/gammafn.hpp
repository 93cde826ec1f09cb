#pragma once

#include <complex>

namespace gsp4 {

using cplx = std::complex<double>;

/// Gamma function for complex argument (Lanczos approximation, g = 7).
cplx cgamma(const cplx& z);

/// log |Gamma| + i arg on the principal strip; used where products of many
/// Gamma factors would under/overflow.
cplx clgamma(const cplx& z);

/// Distance from z to the nearest pole of Gamma (nonpositive integers).
double gamma_pole_distance(const cplx& z);

} // namespace gsp4
