#pragma once

#include <complex>

namespace gsp4 {

using cplx = std::complex<double>;

/// Modified Bessel function of the second kind with complex order.
///
/// Two routes are combined: the power series of I_{+nu}, I_{-nu} through the
/// reflection K = pi (I_{-nu} - I_nu) / (2 sin pi nu) in the oscillatory
/// region (small argument relative to |Im nu|), and the real-axis integral
/// int_0^inf exp(-x cosh t) cosh(nu t) dt elsewhere and near integer orders.
/// Throws DomainError for x <= 0.
cplx bessel_K(const cplx& nu, double x);

/// Force one specific route (used by the cross-validation tests).
cplx bessel_K_series(const cplx& nu, double x);
cplx bessel_K_integral(const cplx& nu, double x);

} // namespace gsp4
