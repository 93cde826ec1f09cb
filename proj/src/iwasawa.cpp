#include "gsp4/iwasawa.hpp"

#include <cmath>

#include "gsp4/errors.hpp"

namespace gsp4 {

Md4 Md4::identity() {
    Md4 m;
    for (int i = 0; i < 4; ++i) m.at(i, i) = 1.0;
    return m;
}

Md4 Md4::diagonal(double d0, double d1, double d2, double d3) {
    Md4 m;
    m.at(0, 0) = d0; m.at(1, 1) = d1; m.at(2, 2) = d2; m.at(3, 3) = d3;
    return m;
}

Md4 Md4::operator*(const Md4& rhs) const {
    Md4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0;
            for (int k = 0; k < 4; ++k) s += at(i, k) * rhs.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

Md4 Md4::transposed() const {
    Md4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
    return r;
}

Md4 Md4::inverse_symplectic() const {
    // g^{-1} = J^{-1} g^T J for multiplier-1 elements
    const Md4& J = form_J_d();
    Md4 Jinv;
    Jinv.at(0, 2) = -1; Jinv.at(1, 3) = -1; Jinv.at(2, 0) = 1; Jinv.at(3, 1) = 1;
    return Jinv * transposed() * J;
}

double Md4::frobenius2() const {
    double s = 0;
    for (double v : e) s += v * v;
    return s;
}

const Md4& form_J_d() {
    static const Md4 J = [] {
        Md4 m;
        m.at(0, 2) = 1; m.at(1, 3) = 1; m.at(2, 0) = -1; m.at(3, 1) = -1;
        return m;
    }();
    return J;
}

double symplectic_defect(const Md4& g, double* mu_out) {
    Md4 w = g.transposed() * form_J_d() * g;
    double mu = w.at(0, 2);
    if (mu_out) *mu_out = mu;
    Md4 target = form_J_d();
    double defect = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            defect = std::max(defect, std::abs(w.at(i, j) - mu * target.at(i, j)));
    return defect;
}

Md4 u_matrix_d(double x, double a, double b, double c) {
    Md4 m = Md4::identity();
    m.at(0, 2) = c;
    m.at(0, 3) = a - c * x;
    m.at(1, 0) = x;
    m.at(1, 2) = a;
    m.at(1, 3) = b;
    m.at(2, 3) = -x;
    return m;
}

Md4 from_exact(const Mat4& m) {
    Md4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r.at(i, j) = m.at(i, j).convert_to<double>();
    return r;
}

namespace {

struct UDU {
    double x, a, b, c;
    double d1, d2, d3, d4;
};

// M = u D u^T for symmetric positive definite symplectic M
UDU udu_extract(const Md4& M) {
    UDU r;
    r.d4 = M.at(3, 3);
    r.x = -M.at(2, 3) / r.d4;
    r.b = M.at(1, 3) / r.d4;
    double amcx = M.at(0, 3) / r.d4;
    r.d3 = M.at(2, 2) - r.x * r.x * r.d4;
    r.a = (M.at(1, 2) + r.b * r.x * r.d4) / r.d3;
    r.c = (M.at(0, 2) + amcx * r.x * r.d4) / r.d3;
    r.d1 = M.at(0, 0) - r.c * r.c * r.d3 - amcx * amcx * r.d4;
    r.d2 = M.at(1, 1) - r.x * r.x * r.d1 - r.a * r.a * r.d3 - r.b * r.b * r.d4;
    return r;
}

} // namespace

LieAElement iwasawa_A(const Md4& g) {
    double mu = 0;
    if (symplectic_defect(g, &mu) > 1e-10 || std::abs(mu - 1.0) > 1e-10)
        throw NotSymplectic("iwasawa_A: input is not in Sp4(R)");
    UDU f = udu_extract(g * g.transposed());
    return {0.5 * std::log(f.d1), 0.5 * std::log(f.d2)};
}

LieAElement iwasawa_A_unchecked(const Md4& g) {
    UDU f = udu_extract(g * g.transposed());
    return {0.5 * std::log(f.d1), 0.5 * std::log(f.d2)};
}

LieAElement A_Ju_closed_form(double x, double a, double b, double c) {
    double amcx = a - c * x;
    double P1 = 1.0 + x * x + a * a + b * b;
    double t1 = a * amcx + 1.0 - b * c;
    double t2 = x * amcx - b - c;
    double P2 = t1 * t1 + t2 * t2;
    return {0.5 * std::log(P1 / P2), -0.5 * std::log(P1)};
}

IwasawaUAK iwasawa_uak(const Md4& g) {
    double mu = 0;
    if (symplectic_defect(g, &mu) > 1e-10 || std::abs(mu - 1.0) > 1e-10)
        throw NotSymplectic("iwasawa_uak: input is not in Sp4(R)");
    UDU f = udu_extract(g * g.transposed());
    IwasawaUAK r;
    r.ux = f.x;
    r.ua = f.a;
    r.ub = f.b;
    r.uc = f.c;
    r.A = {0.5 * std::log(f.d1), 0.5 * std::log(f.d2)};
    Md4 einv = Md4::diagonal(std::exp(-r.A.h1), std::exp(-r.A.h2),
                             std::exp(r.A.h1), std::exp(r.A.h2));
    Md4 uinv = u_matrix_d(-f.x, f.x * f.c - f.a, -f.b, -f.c);
    r.k = einv * uinv * g;
    return r;
}

Md4 apoint_matrix(const APoint& a) {
    return Md4::diagonal(a.a1, a.a2, 1.0 / a.a1, 1.0 / a.a2);
}

} // namespace gsp4
