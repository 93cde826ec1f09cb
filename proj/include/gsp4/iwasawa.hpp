#pragma once

// Double-precision symplectic 4x4 helpers and the Iwasawa A-projection
// g = u exp(A) k, computed from the structured UDU^T factorization of g g^T.

#include <array>

#include "gsp4/roots.hpp"

namespace gsp4 {

struct Md4 {
    std::array<double, 16> e{};

    double& at(int i, int j) { return e[static_cast<size_t>(4 * i + j)]; }
    double at(int i, int j) const { return e[static_cast<size_t>(4 * i + j)]; }

    static Md4 identity();
    static Md4 diagonal(double d0, double d1, double d2, double d3);
    Md4 operator*(const Md4& rhs) const;
    Md4 transposed() const;
    Md4 inverse_symplectic() const; // valid for multiplier-1 elements
    double frobenius2() const;
};

/// J as doubles.
const Md4& form_J_d();

/// ||g^T J g - mu J|| estimate and the multiplier read off the (1,3) slot.
double symplectic_defect(const Md4& g, double* mu_out = nullptr);

/// u(x,a,b,c) as doubles (standard layout).
Md4 u_matrix_d(double x, double a, double b, double c);
Md4 from_exact(const Mat4& m);

/// The unique A with g in U exp(A) K_inf. Requires g in Sp4(R) within 1e-10.
LieAElement iwasawa_A(const Md4& g);

/// Same extraction without the symplectic validation (inner-loop use).
LieAElement iwasawa_A_unchecked(const Md4& g);

/// Closed form of A(J u(x,a,b,c)).
LieAElement A_Ju_closed_form(double x, double a, double b, double c);

/// Full decomposition g = u exp(A) k.
struct IwasawaUAK {
    double ux, ua, ub, uc;
    LieAElement A;
    Md4 k;
};
IwasawaUAK iwasawa_uak(const Md4& g);

/// a as a matrix: diag(a1, a2, 1/a1, 1/a2).
Md4 apoint_matrix(const APoint& a);

} // namespace gsp4
