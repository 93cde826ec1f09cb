#include "gsp4/cfunction.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "gsp4/errors.hpp"
#include "gsp4/gammafn.hpp"
#include "gsp4/iwasawa.hpp"
#include "gsp4/quadrature.hpp"

namespace gsp4 {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

double c_norm_constant() {
    // C0 with c(rho) = 1; the product at rho is finite (no poles on Phi+)
    static const double c0 = [] {
        const RootSystemData& rs = RootSystemData::get();
        cplx prod = 1.0;
        for (const RootVec& a : rs.positive()) {
            cplx t = rs.alpha0_pairing(rs.rho(), a);
            prod *= cgamma(t) / cgamma(0.5 + t);
        }
        return 1.0 / prod.real();
    }();
    return c0;
}

// Numeric evaluation of Z(nu) = int_{R^4} e^{(nu+rho)(A(Ju))} du, du Lebesgue.
// The integrand is P1^{-p1} P2^{-p2} with P1 = 1+x^2+a^2+b^2 and
// P2(c) = (u0 - c u1)^2 + (v0 - c v1)^2, where u0 = a^2+1, u1 = ax+b,
// v0 = ax-b, v1 = x^2+1. P2 is quadratic in c with minimum P1^2/L^2,
// L^2 = u1^2 + v1^2 (the resultant identity u0 v1 - v0 u1 = P1), so the
// substitution c = c* + (P1/L^2) sinh(t) turns the c-axis into the universal
// profile cosh(t)^{1-2p2}, integrated once; the remaining three axes use a
// panelled sinh substitution.
double c_integral_raw(double nu1, double nu2, int n) {
    // (nu+rho)(A(Ju)) = -(nu2-nu1+1)/2 log P1 - (nu1+1)/2 log P2
    const double p1 = 0.5 * (nu2 - nu1 + 1.0);  // exponent of 1/P1
    const double p2 = 0.5 * (nu1 + 1.0);        // exponent of 1/P2
    if (!(2.0 * p2 > 1.0 + 1e-9))
        throw DomainError("c_integral_raw: c-axis diverges, need nu1 > 0");

    // S(p2) = int cosh(t)^{1-2p2} dt, truncated where the tail is negligible
    const double decay = 2.0 * p2 - 1.0;
    const double Tc = std::min(120.0, 42.0 / decay);
    double Sc = 0;
    {
        const GaussRule& g = gauss_legendre(160);
        for (int i = 0; i < 160; ++i) {
            double t = Tc * g.x[static_cast<size_t>(i)];
            Sc += Tc * g.w[static_cast<size_t>(i)] * std::pow(std::cosh(t), 1.0 - 2.0 * p2);
        }
    }

    // panelled sinh nodes for the x, a, b axes
    const double T = 15.0, split = 2.5;
    const int nt = std::max(8, n / 3);
    std::vector<double> t, jac;
    auto add_panel = [&](double lo, double hi, int m) {
        const GaussRule& g = gauss_legendre(m);
        double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        for (int i = 0; i < m; ++i) {
            double s = c + h * g.x[static_cast<size_t>(i)];
            t.push_back(std::sinh(s));
            jac.push_back(h * g.w[static_cast<size_t>(i)] * std::cosh(s));
        }
    };
    add_panel(-T, -split, nt);
    add_panel(-split, split, n);
    add_panel(split, T, nt);
    const int m = static_cast<int>(t.size());

    const double q1 = p1 + 2.0 * p2 - 1.0; // exponent of 1/P1 after the c-axis
    double acc = 0;
    for (int ix = 0; ix < m; ++ix)
        for (int ia = 0; ia < m; ++ia) {
            double x = t[static_cast<size_t>(ix)], a = t[static_cast<size_t>(ia)];
            double w2 = jac[static_cast<size_t>(ix)] * jac[static_cast<size_t>(ia)];
            double ax = a * x;
            double v1 = x * x + 1.0;
            double base = 1.0 + x * x + a * a;
            for (int ib = 0; ib < m; ++ib) {
                double b = t[static_cast<size_t>(ib)];
                double P1 = base + b * b;
                double u1 = ax + b;
                double L2 = u1 * u1 + v1 * v1;
                acc += w2 * jac[static_cast<size_t>(ib)] *
                       std::pow(P1, -q1) * std::pow(L2, p2 - 1.0);
            }
        }
    return acc * Sc;
}

} // namespace

cplx harish_chandra_c(const SpectralParam& nu) {
    const RootSystemData& rs = RootSystemData::get();
    cplx prod = 1.0;
    for (const RootVec& a : rs.positive()) {
        cplx t = rs.alpha0_pairing(nu, a);
        if (gamma_pole_distance(t) < 1e-9)
            throw GammaPole("harish_chandra_c: pole at the evaluation point");
        prod *= cgamma(t) / cgamma(0.5 + t);
    }
    return c_norm_constant() * prod;
}

double plancherel_density(double nu1, double nu2) {
    const RootSystemData& rs = RootSystemData::get();
    double c0 = c_norm_constant();
    double prod = 1.0 / (c0 * c0);
    for (const RootVec& a : rs.positive()) {
        double t = rs.alpha0_pairing({nu1, nu2}, a).real();
        prod *= t * std::tanh(kPi * t);
    }
    return prod;
}

cplx plancherel_via_c(double nu1, double nu2) {
    SpectralParam inu{cplx(0, nu1), cplx(0, nu2)};
    cplx cp = harish_chandra_c(inu);
    cplx cm = harish_chandra_c(-inu);
    return 1.0 / (cp * cm);
}

double haar_u_normalization(int n_nodes) {
    static std::mutex mtx;
    static std::map<int, double> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n_nodes);
    if (it != cache.end()) return it->second;
    SpectralParam r = rho();
    double z = c_integral_raw(r.nu1.real(), r.nu2.real(), n_nodes);
    cache[n_nodes] = z;
    return z;
}

double c_integral_numeric(double nu1, double nu2, int n_nodes) {
    if (!(0 < nu1 && nu1 < nu2))
        throw DomainError("c_integral_numeric: nu must satisfy 0 < nu1 < nu2");
    return c_integral_raw(nu1, nu2, n_nodes) / haar_u_normalization(n_nodes);
}

} // namespace gsp4
