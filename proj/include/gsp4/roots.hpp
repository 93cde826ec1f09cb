#pragma once

// Root-system constants of sp4 derived from the Killing form <X,Y> = 6 Tr(XY)
// on a = {diag(h1,h2,-h1,-h2)}, with the positive chamber 0 < h1 < h2.

#include <array>
#include <complex>

#include "gsp4/exact.hpp"

namespace gsp4 {

using cplx = std::complex<double>;

/// H = diag(h1, h2, -h1, -h2)
struct LieAElement {
    double h1 = 0, h2 = 0;
    bool in_positive_chamber() const { return 0 < h1 && h1 < h2; }
};

/// a = diag(a1, a2, 1/a1, 1/a2) with a1, a2 > 0
struct APoint {
    double a1 = 1, a2 = 1;
    LieAElement log() const { return {std::log(a1), std::log(a2)}; }
};

/// nu = nu1 e1* + nu2 e2* in the basis dual to (h1, h2)
struct SpectralParam {
    cplx nu1 = 0, nu2 = 0;
    SpectralParam operator+(const SpectralParam& o) const { return {nu1 + o.nu1, nu2 + o.nu2}; }
    SpectralParam operator-() const { return {-nu1, -nu2}; }
    SpectralParam times_i() const { return {cplx(0, 1) * nu1, cplx(0, 1) * nu2}; }
    cplx operator()(const LieAElement& H) const { return nu1 * H.h1 + nu2 * H.h2; }
};

/// a linear form r1 e1* + r2 e2* with integer coefficients (a root)
struct RootVec {
    int r1, r2;
};

class RootSystemData {
public:
    static const RootSystemData& get();

    /// Killing pairing of two linear forms on a, <lam, nu> = <A_lam, A_nu>.
    static double killing_pair(double l1, double l2, double n1, double n2);

    const std::array<RootVec, 4>& positive() const { return positive_; }
    const std::array<RootVec, 8>& all() const { return all_; }
    SpectralParam rho() const { return {rho1_, rho2_}; }

    /// <nu, alpha_0> with alpha_0 = alpha / <alpha, alpha>.
    cplx alpha0_pairing(const SpectralParam& nu, const RootVec& a) const;

private:
    RootSystemData();
    std::array<RootVec, 4> positive_;
    std::array<RootVec, 8> all_;
    double rho1_, rho2_;
};

/// Image of nu under the Weyl representative sigma (derived from conjugation
/// of the torus by the fixed representative matrices).
SpectralParam weyl_act(WeylTag sigma, const SpectralParam& nu);

/// rho = half sum of positive roots = (1, 2).
SpectralParam rho();

/// (rho + nu)(A) evaluated at a Lie algebra point.
cplx rho_plus(const SpectralParam& nu, const LieAElement& H);

} // namespace gsp4
