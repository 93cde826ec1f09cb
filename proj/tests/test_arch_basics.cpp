#include "doctest.h"

#include <cmath>
#include <random>

#include "gsp4/besselk.hpp"
#include "gsp4/cfunction.hpp"
#include "gsp4/gammafn.hpp"
#include "gsp4/iwasawa.hpp"
#include "gsp4/quadrature.hpp"

using namespace gsp4;

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
std::mt19937_64 rng(0x5eed0003ULL);
std::uniform_real_distribution<double> unif(-3.0, 3.0);

Md4 random_K_elem() {
    // k = [[A,B],[-B,A]] with A+iB = e^{i phi} q, q in SU(2) from a random S^3 point
    std::normal_distribution<double> gauss;
    double q0 = gauss(rng), q1 = gauss(rng), q2 = gauss(rng), q3 = gauss(rng);
    double r = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
    q0 /= r; q1 /= r; q2 /= r; q3 /= r;
    double phi = std::uniform_real_distribution<double>(0.0, 2.0 * kPi)(rng);
    cplx u11(q0, q1), u12(q2, q3);
    cplx e = std::polar(1.0, phi);
    cplx a11 = e * u11, a12 = e * u12, a21 = -e * std::conj(u12), a22 = e * std::conj(u11);
    Md4 k;
    k.at(0, 0) = a11.real(); k.at(0, 1) = a12.real();
    k.at(1, 0) = a21.real(); k.at(1, 1) = a22.real();
    k.at(0, 2) = a11.imag(); k.at(0, 3) = a12.imag();
    k.at(1, 2) = a21.imag(); k.at(1, 3) = a22.imag();
    k.at(2, 0) = -a11.imag(); k.at(2, 1) = -a12.imag();
    k.at(3, 0) = -a21.imag(); k.at(3, 1) = -a22.imag();
    k.at(2, 2) = a11.real(); k.at(2, 3) = a12.real();
    k.at(3, 2) = a21.real(); k.at(3, 3) = a22.real();
    return k;
}

Md4 random_sp4() {
    Md4 u = u_matrix_d(unif(rng), unif(rng), unif(rng), unif(rng));
    double h1 = 0.5 * unif(rng), h2 = 0.5 * unif(rng);
    Md4 a = Md4::diagonal(std::exp(h1), std::exp(h2), std::exp(-h1), std::exp(-h2));
    return u * a * random_K_elem();
}

} // namespace

TEST_CASE("complex gamma: classical values and reflection") {
    CHECK(std::abs(cgamma(cplx(0.5)) - std::sqrt(kPi)) < 1e-13);
    CHECK(std::abs(cgamma(cplx(5.0)) - 24.0) < 1e-12);
    // |Gamma(1+iy)|^2 = pi y / sinh(pi y)
    for (double y : {0.3, 1.0, 4.0}) {
        double lhs = std::norm(cgamma(cplx(1.0, y)));
        double rhs = kPi * y / std::sinh(kPi * y);
        CHECK(std::abs(lhs - rhs) < 1e-12 * rhs);
    }
    // recurrence Gamma(z+1) = z Gamma(z)
    cplx z(0.3, -1.7);
    CHECK(std::abs(cgamma(z + 1.0) - z * cgamma(z)) < 1e-12 * std::abs(cgamma(z + 1.0)));
}

TEST_CASE("quadrature: gauss rules and adaptive GK") {
    auto f = [](double x) { return cplx(std::exp(-x * x)); };
    cplx v = integrate_gk(f, -8.0, 8.0, 1e-14, 1e-13);
    CHECK(std::abs(v - std::sqrt(kPi)) < 1e-12);
    cplx p = integrate_gl([](double x) { return cplx(x * x * x * x); }, 0.0, 1.0, 8);
    CHECK(std::abs(p - 0.2) < 1e-14);
    // oscillatory
    cplx o = integrate_gk([](double x) { return cplx(std::cos(20.0 * x)); }, 0.0, 1.0, 1e-14, 1e-12);
    CHECK(std::abs(o - std::sin(20.0) / 20.0) < 1e-11);
}

TEST_CASE("bessel K: half-integer closed form, parity, route agreement") {
    for (double x : {0.001, 0.03, 0.4, 1.0, 3.0, 10.0, 40.0}) {
        cplx v = bessel_K(cplx(0.5), x);
        double ref = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
        CHECK(std::abs(v - ref) < 1e-10 * ref);
    }
    std::uniform_real_distribution<double> ot(0.1, 6.0);
    for (int i = 0; i < 25; ++i) {
        cplx nu(unif(rng), unif(rng));
        double x = ot(rng);
        cplx a = bessel_K(nu, x), b = bessel_K(-nu, x);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1e-280, std::abs(a)));
    }
    // series vs integral on the overlap strip
    for (double x : {1.0, 2.5, 4.0}) {
        for (cplx nu : {cplx(0.3, 2.0), cplx(1.4, 5.0), cplx(0.25, 9.0), cplx(2.3, 0.4)}) {
            cplx s = bessel_K_series(nu, x);
            cplx in = bessel_K_integral(nu, x);
            CHECK(std::abs(s - in) < 1e-9 * std::max(std::abs(s), 1e-30));
        }
    }
    // decay regime |K_nu(x)| <= C x^{-1/2} e^{-x} past the transition point
    for (double tau : {0.0, 3.0, 11.0}) {
        cplx nu(0.0, tau);
        for (double x : {1.0 + kPi / 2.0 * tau + 0.5, 2.0 * (1.0 + tau)}) {
            double bound = 3.0 * std::exp(-x) / std::sqrt(x);
            CHECK(std::abs(bessel_K(nu, x)) <= bound);
        }
    }
    CHECK_THROWS_AS(bessel_K(cplx(0.5), -1.0), DomainError);
}

TEST_CASE("root system data: derivation regressions") {
    const RootSystemData& rs = RootSystemData::get();
    // rho = (1,2), derived as the half sum
    CHECK(rs.rho().nu1 == cplx(1.0));
    CHECK(rs.rho().nu2 == cplx(2.0));
    // Killing form on a: 6 Tr(H H') = 12 (h1 h1' + h2 h2')
    auto six_tr = [](double a1, double a2, double b1, double b2) {
        return 6.0 * (a1 * b1 + a2 * b2 + a1 * b1 + a2 * b2);
    };
    CHECK(six_tr(1, 0, 1, 0) == 12.0);
    CHECK(RootSystemData::killing_pair(1, 0, 1, 0) * 144.0 == doctest::Approx(12.0));
    // positivity on the chamber and <alpha0, alpha> = 1
    for (const RootVec& a : rs.positive()) {
        CHECK(a.r1 * 0.5 + a.r2 * 1.0 > 0); // H = (1/2, 1), inside 0 < h1 < h2
        SpectralParam alpha{double(a.r1), double(a.r2)};
        CHECK(std::abs(rs.alpha0_pairing(alpha, a) - cplx(1.0)) < 1e-14);
    }
    // pairing values over the positive roots at nu
    SpectralParam nu{cplx(0.7, 0.1), cplx(2.2, -0.4)};
    cplx vals[4] = {0.5 * (nu.nu2 - nu.nu1), 0.5 * (nu.nu1 + nu.nu2), 0.5 * nu.nu2, 0.5 * nu.nu1};
    bool found[4] = {false, false, false, false};
    for (const RootVec& a : rs.positive()) {
        cplx p = rs.alpha0_pairing(nu, a);
        for (int i = 0; i < 4; ++i)
            if (std::abs(p - vals[i]) < 1e-14) found[i] = true;
    }
    for (bool f : found) CHECK(f);
}

TEST_CASE("root carriers: torus conjugation scales the U coordinates") {
    // conjugation by diag(t1,t2,t3/t1,t3/t2) scales (x,a,b,c) by
    // (t1/t2, t3/(t1 t2), t3/t2^2, t3/t1^2)
    Rat t1(3), t2(5), t3(7);
    Mat4 tm = Mat4::diagonal(t1, t2, t3 / t1, t3 / t2);
    UCoords u{Rat(1, 2), Rat(2, 3), Rat(-1, 4), Rat(5, 6)};
    UCoords conj = u_coords(tm.inverse() * u_matrix_raw(u) * tm);
    CHECK(conj.x == u.x * t1 / t2);
    CHECK(conj.a == u.a * t3 / (t1 * t2));
    CHECK(conj.b == u.b * t3 / (t2 * t2));
    CHECK(conj.c == u.c * t3 / (t1 * t1));
}

TEST_CASE("weyl action on spectral parameters: signed permutation group") {
    SpectralParam nu{cplx(0.37, 0.11), cplx(1.91, -0.23)};
    std::set<std::pair<double, double>> orbit;
    for (WeylTag w : kAllWeylTags) {
        SpectralParam im = weyl_act(w, nu);
        // entries are +-nu1, +-nu2 in some order
        double m1 = std::abs(im.nu1.real()), m2 = std::abs(im.nu2.real());
        CHECK(((std::abs(m1 - 0.37) < 1e-14 && std::abs(m2 - 1.91) < 1e-14) ||
               (std::abs(m1 - 1.91) < 1e-14 && std::abs(m2 - 0.37) < 1e-14)));
        orbit.insert({im.nu1.real(), im.nu2.real()});
    }
    CHECK(orbit.size() == 8);
}

TEST_CASE("iwasawa A-projection: basics") {
    CHECK(iwasawa_A(Md4::identity()).h1 == doctest::Approx(0.0).epsilon(1e-14));
    Md4 a = Md4::diagonal(std::exp(1.0), std::exp(2.0), std::exp(-1.0), std::exp(-2.0));
    LieAElement A = iwasawa_A(a);
    CHECK(A.h1 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(A.h2 == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(A.in_positive_chamber());
    Md4 bad = Md4::identity();
    bad.at(0, 0) = 2.0;
    CHECK_THROWS_AS(iwasawa_A(bad), NotSymplectic);
}

TEST_CASE("A(Ju) closed form vs numeric Iwasawa, and the sign symmetry") {
    for (int i = 0; i < 200; ++i) {
        double x = unif(rng), a = unif(rng), b = unif(rng), c = unif(rng);
        Md4 Ju = form_J_d() * u_matrix_d(x, a, b, c);
        LieAElement closed = A_Ju_closed_form(x, a, b, c);
        LieAElement numeric = iwasawa_A(Ju);
        CHECK(std::abs(closed.h1 - numeric.h1) < 1e-10);
        CHECK(std::abs(closed.h2 - numeric.h2) < 1e-10);
        LieAElement mirrored = A_Ju_closed_form(-x, a, -b, -c);
        CHECK(closed.h1 == mirrored.h1);
        CHECK(closed.h2 == mirrored.h2);
    }
    LieAElement zero = A_Ju_closed_form(0, 0, 0, 0);
    CHECK(zero.h1 == 0.0);
    CHECK(zero.h2 == 0.0);
}

TEST_CASE("iwasawa A is left-U and right-K invariant; uak reconstructs") {
    for (int i = 0; i < 40; ++i) {
        Md4 g = random_sp4();
        LieAElement A = iwasawa_A(g);
        Md4 ug = u_matrix_d(unif(rng), unif(rng), unif(rng), unif(rng)) * g;
        LieAElement Au = iwasawa_A(ug);
        CHECK(std::abs(A.h1 - Au.h1) < 1e-10);
        CHECK(std::abs(A.h2 - Au.h2) < 1e-10);
        Md4 gk = g * random_K_elem();
        LieAElement Ak = iwasawa_A(gk);
        CHECK(std::abs(A.h1 - Ak.h1) < 1e-9);
        CHECK(std::abs(A.h2 - Ak.h2) < 1e-9);

        IwasawaUAK d = iwasawa_uak(g);
        Md4 rec = u_matrix_d(d.ux, d.ua, d.ub, d.uc) *
                  Md4::diagonal(std::exp(d.A.h1), std::exp(d.A.h2),
                                std::exp(-d.A.h1), std::exp(-d.A.h2)) * d.k;
        double err = 0;
        for (int r = 0; r < 4; ++r)
            for (int cidx = 0; cidx < 4; ++cidx)
                err = std::max(err, std::abs(rec.at(r, cidx) - g.at(r, cidx)));
        CHECK(err < 1e-9);
        // k orthogonal and symplectic
        Md4 ktk = d.k * d.k.transposed();
        double oerr = 0;
        for (int r = 0; r < 4; ++r)
            for (int cidx = 0; cidx < 4; ++cidx)
                oerr = std::max(oerr, std::abs(ktk.at(r, cidx) - (r == cidx ? 1.0 : 0.0)));
        CHECK(oerr < 1e-9);
        CHECK(symplectic_defect(d.k) < 1e-9);
    }
}

TEST_CASE("c-function: normalization, conjugate symmetry, poles") {
    SpectralParam r = rho();
    CHECK(std::abs(harish_chandra_c(r) - cplx(1.0)) < 1e-12);
    SpectralParam nu{cplx(0.9, 0.4), cplx(2.1, -0.7)};
    SpectralParam nubar{std::conj(nu.nu1), std::conj(nu.nu2)};
    CHECK(std::abs(harish_chandra_c(nubar) - std::conj(harish_chandra_c(nu))) < 1e-12);
    CHECK_THROWS_AS(harish_chandra_c(SpectralParam{cplx(0.0), cplx(0.0)}), GammaPole);
}

TEST_CASE("plancherel density: two routes agree; zero and symmetry") {
    CHECK(plancherel_density(0.0, 0.7) == 0.0);
    CHECK(plancherel_density(0.0, 0.0) == 0.0);
    std::uniform_real_distribution<double> nr(-6.0, 6.0);
    for (int i = 0; i < 50; ++i) {
        double n1 = nr(rng), n2 = nr(rng);
        if (std::abs(n1) < 1e-3 || std::abs(n2) < 1e-3 || std::abs(n1 - n2) < 1e-3 ||
            std::abs(n1 + n2) < 1e-3)
            continue;
        double tanh_route = plancherel_density(n1, n2);
        cplx c_route = plancherel_via_c(n1, n2);
        CHECK(std::abs(c_route.imag()) < 1e-10 * std::abs(c_route));
        CHECK(std::abs(tanh_route - c_route.real()) < 1e-10 * std::abs(tanh_route));
        CHECK(tanh_route >= 0.0);
        CHECK(plancherel_density(-n1, n2) == doctest::Approx(tanh_route).epsilon(1e-13));
        CHECK(plancherel_density(n2, n1) == doctest::Approx(tanh_route).epsilon(1e-13));
    }
}

TEST_CASE("numeric c-integral matches the Gamma formula" * doctest::timeout(300)) {
    struct Pt { double n1, n2; };
    for (Pt p : {Pt{1.0, 2.0}, Pt{1.15, 2.2}, Pt{0.9, 2.35}}) {
        double numeric = c_integral_numeric(p.n1, p.n2, 48);
        cplx formula = harish_chandra_c({p.n1, p.n2});
        CHECK(std::abs(numeric - formula.real()) < 2e-3 * std::abs(formula.real()));
    }
}
