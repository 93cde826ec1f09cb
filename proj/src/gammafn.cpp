#include "gsp4/gammafn.hpp"

#include <cmath>

namespace gsp4 {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

// Lanczos coefficients, g = 7, n = 9
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

cplx lanczos_core(const cplx& z) {
    // valid for Re z > 0.5; z here is the argument itself
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z - 1.0 + double(i));
    cplx t = z + 6.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) * x;
}

} // namespace

cplx cgamma(const cplx& z) {
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        return kPi / (std::sin(kPi * z) * lanczos_core(1.0 - z));
    }
    return lanczos_core(z);
}

cplx clgamma(const cplx& z) {
    if (z.real() < 0.5) {
        return std::log(kPi) - std::log(std::sin(kPi * z)) - clgamma(1.0 - z);
    }
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z - 1.0 + double(i));
    cplx t = z + 6.5;
    return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(x);
}

double gamma_pole_distance(const cplx& z) {
    if (z.real() > 0.5) return 1.0;
    double nearest = std::round(z.real());
    if (nearest > 0.0) nearest = 0.0;
    return std::hypot(z.real() - nearest, z.imag());
}

} // namespace gsp4
