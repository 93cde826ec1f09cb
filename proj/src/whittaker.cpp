#include "gsp4/whittaker.hpp"

#include <cmath>
#include <vector>

#include "gsp4/besselk.hpp"
#include "gsp4/errors.hpp"
#include "gsp4/gammafn.hpp"
#include "gsp4/quadrature.hpp"

namespace gsp4 {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kTwoPi = 2.0 * kPi;

// integration box in s = log v for the Ishii integrand
struct Box {
    double lo, hi;
};

Box ishii_box(const APoint& a) {
    const double L = 46.0; // exp(-L) below double noise for these magnitudes
    double smax = 0.5 * (std::log(L / kPi) + 2.0 * std::log(a.a1));
    double smin = 0.5 * (std::log(kPi / L) + 2.0 * std::log(a.a2));
    double dmax = std::acosh(std::max(2.0, L / (kTwoPi * a.a1 * a.a1)));
    double hi = 0.5 * (2.0 * smax + dmax) + 1.0;
    double lo = 0.5 * (2.0 * smin - dmax) - 1.0;
    // the Bessel factor also caps the right end: 2 pi e^s <= L
    hi = std::min(hi, std::log(L / kTwoPi) + 0.5);
    return {lo, hi};
}

cplx ishii_grid(const SpectralParam& nu, const APoint& a, int n) {
    const cplx mu1 = 0.5 * (nu.nu2 - nu.nu1);
    const cplx mu2 = 0.5 * (nu.nu1 + nu.nu2);
    Box box = ishii_box(a);
    const GaussRule& g = gauss_legendre(n);
    std::vector<double> s(static_cast<size_t>(n)), w(static_cast<size_t>(n));
    std::vector<cplx> k1(static_cast<size_t>(n)), k2(static_cast<size_t>(n));
    double c = 0.5 * (box.lo + box.hi), h = 0.5 * (box.hi - box.lo);
    for (int i = 0; i < n; ++i) {
        s[static_cast<size_t>(i)] = c + h * g.x[static_cast<size_t>(i)];
        w[static_cast<size_t>(i)] = h * g.w[static_cast<size_t>(i)];
        double v = std::exp(s[static_cast<size_t>(i)]);
        k1[static_cast<size_t>(i)] = bessel_K(mu1, kTwoPi * v);
        k2[static_cast<size_t>(i)] = bessel_K(mu2, kTwoPi * v);
    }
    const double ia1sq = 1.0 / (a.a1 * a.a1);
    const double a2sq = a.a2 * a.a2;
    const double a1sq = a.a1 * a.a1;
    cplx acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double v1 = std::exp(s[static_cast<size_t>(i)]);
        cplx row = 0.0;
        for (int j = 0; j < n; ++j) {
            double v2 = std::exp(s[static_cast<size_t>(j)]);
            double p = v1 * v2;
            double q = v1 / v2;
            double expo = -kPi * (a2sq / p + p * ia1sq + a1sq * (q + 1.0 / q));
            if (expo < -700.0) continue;
            row += w[static_cast<size_t>(j)] * k2[static_cast<size_t>(j)] * std::exp(expo);
        }
        acc += w[static_cast<size_t>(i)] * k1[static_cast<size_t>(i)] * row;
    }
    return 2.0 * a.a1 * a.a2 * a.a2 * acc;
}

} // namespace

cplx whittaker_normalized(const SpectralParam& nu, const APoint& a, double rel_tol) {
    int n = 64;
    cplx prev = ishii_grid(nu, a, n);
    for (int level = 0; level < 3; ++level) {
        int n2 = (3 * n) / 2;
        cplx cur = ishii_grid(nu, a, n2);
        if (std::abs(cur - prev) <= rel_tol * std::max(1e-300, std::abs(cur)))
            return cur;
        prev = cur;
        n = n2;
    }
    throw QuadratureFailure("whittaker_normalized: grid refinement did not converge");
}

cplx whittaker_unnormalized(const SpectralParam& nu, const APoint& a, double rel_tol) {
    const RootSystemData& rs = RootSystemData::get();
    cplx gprod = 1.0;
    for (const RootVec& r : rs.positive()) {
        cplx t = 0.5 + rs.alpha0_pairing(nu, r);
        if (gamma_pole_distance(t) < 1e-9)
            throw GammaPole("whittaker_unnormalized: Gamma factor at a pole");
        gprod *= cgamma(t);
    }
    return 4.0 * kPi * kPi * whittaker_normalized(nu, a, rel_tol) / gprod;
}

APoint reduce_diag_to_apoint(const std::array<double, 4>& d) {
    double r1 = d[0] / d[2], r2 = d[1] / d[3];
    if (!(r1 > 0.0) || !(r2 > 0.0))
        throw DomainError("reduce_diag_to_apoint: diagonal not reducible to A+");
    return {std::sqrt(r1), std::sqrt(r2)};
}

cplx whittaker_general(const SpectralParam& nu, const Md4& g, double mx, double mc,
                       double rel_tol) {
    double mu = 0;
    double defect = symplectic_defect(g, &mu);
    if (!(mu > 0) || defect > 1e-8 * std::max(1.0, std::abs(mu)))
        throw DomainError("whittaker_general: argument must have positive multiplier");
    double z = std::sqrt(mu);
    Md4 gs = g;
    for (double& e : gs.e) e /= z;
    IwasawaUAK d = iwasawa_uak(gs);
    double phase = mx * d.ux + mc * d.uc;
    APoint a{std::exp(d.A.h1), std::exp(d.A.h2)};
    return std::polar(1.0, kTwoPi * phase) * whittaker_unnormalized(nu, a, rel_tol);
}

cplx whittaker_jacquet_direct(const SpectralParam& nu, const Md4& g, double mx,
                              double mc, int n_nodes) {
    // outer (x, a, b) axes on panelled sinh nodes; the c-axis by adaptive
    // Gauss-Kronrod (the integrand concentrates in a narrow c-window at
    // large radius)
    const Md4& J = form_J_d();
    NodeSet ns = sinh_panel_nodes(13.0, 2.8, n_nodes, std::max(10, n_nodes / 3));
    const int n = static_cast<int>(ns.x.size());
    SpectralParam r = rho();
    const double cT = 13.0;
    cplx acc = 0.0;
    for (int ix = 0; ix < n; ++ix)
        for (int ia = 0; ia < n; ++ia)
            for (int ib = 0; ib < n; ++ib) {
                double x = ns.x[static_cast<size_t>(ix)], av = ns.x[static_cast<size_t>(ia)], b = ns.x[static_cast<size_t>(ib)];
                double w3 = ns.w[static_cast<size_t>(ix)] * ns.w[static_cast<size_t>(ia)] * ns.w[static_cast<size_t>(ib)];
                Md4 Ju = J * u_matrix_d(x, av, b, 0.0);
                auto fc = [&](double tc) {
                    double cv = std::sinh(tc);
                    double jc = std::cosh(tc);
                    // u(x,a,b,c) = u(x,a,b,0) * u(0, 0, 0, c) shifted: build directly
                    Md4 m = J * u_matrix_d(x, av, b, cv) * g;
                    LieAElement A = iwasawa_A_unchecked(m);
                    cplx expo = (r.nu1 + nu.nu1) * A.h1 + (r.nu2 + nu.nu2) * A.h2;
                    return jc * std::exp(expo) *
                           std::polar(1.0, -kTwoPi * (mx * x + mc * cv));
                };
                (void)Ju;
                cplx inner;
                try {
                    inner = integrate_gk(fc, -cT, cT, 1e-13, 1e-9, 13);
                } catch (const QuadratureFailure&) {
                    inner = integrate_gl(fc, -cT, cT, 160);
                }
                acc += w3 * inner;
            }
    return acc;
}

} // namespace gsp4
