#include "gsp4/besselk.hpp"

#include <cmath>

#include "gsp4/errors.hpp"
#include "gsp4/gammafn.hpp"
#include "gsp4/quadrature.hpp"

namespace gsp4 {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

// power series of I_nu(x) = (x/2)^nu sum_k (x^2/4)^k / (k! Gamma(nu+k+1))
cplx bessel_I_series(const cplx& nu, double x) {
    const double q = 0.25 * x * x;
    cplx term = std::exp(nu * std::log(0.5 * x) - clgamma(nu + 1.0));
    cplx sum = term;
    for (int k = 1; k < 600; ++k) {
        term *= q / (double(k) * (nu + double(k)));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) && k > 4) break;
    }
    return sum;
}

} // namespace

cplx bessel_K_series(const cplx& nu, double x) {
    cplx s = std::sin(kPi * nu);
    if (std::abs(s) < 1e-8)
        throw DomainError("bessel_K_series: order too close to an integer");
    return 0.5 * kPi * (bessel_I_series(-nu, x) - bessel_I_series(nu, x)) / s;
}

cplx bessel_K_integral(const cplx& nu, double x) {
    // K_nu(x) = int_0^T exp(-x cosh t) cosh(nu t) dt with T past the decay point
    const double sigma = std::abs(nu.real());
    const double L = x + 42.0; // tail below e^{-42} relative to the e^{-x} scale
    double T = std::acosh(std::max(1.5, L / x));
    for (int i = 0; i < 4; ++i)
        T = std::acosh(std::max(1.5, (L + sigma * T) / x));
    auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };
    // panel width tied to the oscillation frequency |Im nu|
    double width = std::min(1.0, 3.0 / (1.0 + std::abs(nu.imag())));
    int panels = std::max(4, int(std::ceil(T / width)));
    cplx acc = 0.0;
    double scale = std::exp(-x); // magnitude of the integrand near t = 0
    for (int p = 0; p < panels; ++p) {
        double a = T * p / panels, b = T * (p + 1) / panels;
        acc += integrate_gk(f, a, b, 1e-15 * scale, 1e-13);
    }
    return acc;
}

cplx bessel_K(const cplx& nu, double x) {
    if (!(x > 0)) throw DomainError("bessel_K: argument must be positive");
    const double tau = std::abs(nu.imag());
    // near-integer orders have negligible oscillation; the integral is exact there
    if (std::abs(std::sin(kPi * nu)) < 0.05) return bessel_K_integral(nu, x);
    if (x < std::max(2.0, 0.5 * tau)) return bessel_K_series(nu, x);
    return bessel_K_integral(nu, x);
}

} // namespace gsp4
