#include "gsp4/roots.hpp"

#include <cmath>
#include <stdexcept>

namespace gsp4 {

namespace {

// roots of the four coordinate root subgroups of U, derived once in the unit
// tests from torus conjugation: x -> e2-e1, a -> e1+e2, b -> 2e2, c -> 2e1
constexpr RootVec kSimpleCarriers[4] = {{-1, 1}, {1, 1}, {0, 2}, {2, 0}};

} // namespace

RootSystemData::RootSystemData() {
    // positive roots: the carriers of U's coordinates (all positive on 0<h1<h2)
    positive_ = {kSimpleCarriers[0], kSimpleCarriers[1], kSimpleCarriers[2], kSimpleCarriers[3]};
    for (int i = 0; i < 4; ++i) {
        all_[static_cast<size_t>(i)] = positive_[static_cast<size_t>(i)];
        all_[static_cast<size_t>(i + 4)] = {-positive_[static_cast<size_t>(i)].r1,
                                            -positive_[static_cast<size_t>(i)].r2};
    }
    double s1 = 0, s2 = 0;
    for (const RootVec& a : positive_) { s1 += a.r1; s2 += a.r2; }
    rho1_ = 0.5 * s1;
    rho2_ = 0.5 * s2;
}

const RootSystemData& RootSystemData::get() {
    static const RootSystemData instance;
    return instance;
}

double RootSystemData::killing_pair(double l1, double l2, double n1, double n2) {
    // <H, H'> = 6 Tr(HH') = 12 (h1 h1' + h2 h2') on a; A_nu = (nu1, nu2)/12,
    // hence <lam, nu> = (l1 n1 + l2 n2)/12
    return (l1 * n1 + l2 * n2) / 12.0;
}

cplx RootSystemData::alpha0_pairing(const SpectralParam& nu, const RootVec& a) const {
    double aa = killing_pair(a.r1, a.r2, a.r1, a.r2);
    // <nu, alpha>/<alpha, alpha>, complex-linear in nu
    cplx na = (nu.nu1 * double(a.r1) + nu.nu2 * double(a.r2)) / 12.0;
    return na / aa;
}

SpectralParam weyl_act(WeylTag sigma, const SpectralParam& nu) {
    // signed permutation derived from sigma^{-1} diag(h) sigma; cached per tag
    struct Action { int m[2][2]; };
    static const std::array<Action, 8> actions = [] {
        std::array<Action, 8> out{};
        for (WeylTag w : kAllWeylTags) {
            const Mat4& s = weyl_matrix(w);
            Mat4 sinv = s.inverse();
            Action act{};
            // conjugate basis elements diag(1,0,-1,0) and diag(0,1,0,-1)
            for (int b = 0; b < 2; ++b) {
                Mat4 H = b == 0 ? Mat4::diagonal(1, 0, -1, 0) : Mat4::diagonal(0, 1, 0, -1);
                Mat4 c = sinv * H * s;
                act.m[0][b] = static_cast<int>(c.at(0, 0).convert_to<long>());
                act.m[1][b] = static_cast<int>(c.at(1, 1).convert_to<long>());
            }
            out[static_cast<size_t>(w)] = act;
        }
        return out;
    }();
    const Action& a = actions[static_cast<size_t>(sigma)];
    // nu transforms contragrediently; signed permutations are orthogonal, so
    // the same matrix applies to the dual coordinates
    return {double(a.m[0][0]) * nu.nu1 + double(a.m[0][1]) * nu.nu2,
            double(a.m[1][0]) * nu.nu1 + double(a.m[1][1]) * nu.nu2};
}

SpectralParam rho() { return RootSystemData::get().rho(); }

cplx rho_plus(const SpectralParam& nu, const LieAElement& H) {
    SpectralParam r = rho();
    return (r.nu1 + nu.nu1) * H.h1 + (r.nu2 + nu.nu2) * H.h2;
}

} // namespace gsp4
