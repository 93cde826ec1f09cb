#pragma once

// Exact rational 4x4 matrix layer for the similitude symplectic group.
// All group-theoretic computations (Bruhat extraction, orbit classification,
// character exponents) are done here with arbitrary-precision rationals;
// nothing in this header touches floating point.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "gsp4/errors.hpp"

namespace gsp4 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

/// Fractional part in [0,1).
Rat frac_mod1(const Rat& q);

/// Floor of a rational as an exact integer.
Int rat_floor(const Rat& q);

class Mat4 {
public:
    Mat4() = default;

    static Mat4 zero();
    static Mat4 identity();
    /// diag(d0,d1,d2,d3)
    static Mat4 diagonal(const Rat& d0, const Rat& d1, const Rat& d2, const Rat& d3);

    Rat& at(int i, int j) { return e_[4 * i + j]; }
    const Rat& at(int i, int j) const { return e_[4 * i + j]; }

    Mat4 operator*(const Mat4& rhs) const;
    Mat4 operator+(const Mat4& rhs) const;
    Mat4 operator-(const Mat4& rhs) const;
    Mat4 scaled(const Rat& z) const;
    bool operator==(const Mat4& rhs) const = default;

    Mat4 transposed() const;
    Rat det() const;
    /// Inverse; throws std::domain_error on singular input.
    Mat4 inverse() const;
    bool is_integral() const;

    std::string str() const;

private:
    std::array<Rat, 16> e_{};
};

std::ostream& operator<<(std::ostream& os, const Mat4& m);

/// The symplectic form J = [[0, I2], [-I2, 0]].
const Mat4& form_J();

/// Multiplier of g: the scalar mu with g^T J g = mu J.
/// Throws NotSymplectic when no such scalar exists.
Rat multiplier(const Mat4& g);

/// Element of the rational similitude group, validated on construction.
class GSpElement {
public:
    explicit GSpElement(Mat4 m);

    const Mat4& mat() const { return m_; }
    const Rat& mu() const { return mu_; }

    GSpElement operator*(const GSpElement& rhs) const;
    GSpElement inverse() const;

private:
    Mat4 m_;
    Rat mu_;
};

/// Bruhat coordinates of a unipotent element u(x,a,b,c).
struct UCoords {
    Rat x, a, b, c;
    bool operator==(const UCoords&) const = default;
};

/// u(x,a,b,c): entries (2,1)=x, (1,3)=c, (2,3)=a, (2,4)=b, (1,4)=a-cx, (3,4)=-x.
Mat4 u_matrix_raw(const UCoords& u);
GSpElement u_matrix(const UCoords& u);

/// Left-factor layout of the long-cell lemma: (2,3) entry is a+cx, (1,4) is a.
Mat4 long_cell_left_raw(const UCoords& u);

/// Exact inverse of u_matrix. Throws NotInU when g is not in U.
UCoords u_coords(const Mat4& g);
inline UCoords u_coords(const GSpElement& g) { return u_coords(g.mat()); }

/// delta_1 = diag(d1, 1, d2, d1*d2); multiplier d1*d2.
struct TorusRep {
    Rat d1, d2;
    TorusRep(Rat d1_, Rat d2_);
    GSpElement matrix() const;
};

enum class WeylTag { One, S1, S2, S1S2, S2S1, S1S2S1, S2S1S2, J };

inline constexpr std::array<WeylTag, 8> kAllWeylTags = {
    WeylTag::One, WeylTag::S1, WeylTag::S2, WeylTag::S1S2,
    WeylTag::S2S1, WeylTag::S1S2S1, WeylTag::S2S1S2, WeylTag::J};

/// The fixed representative matrix of a Weyl group element (signs included).
const Mat4& weyl_matrix(WeylTag tag);
const char* weyl_name(WeylTag tag);

/// Pair of nonzero integers indexing a generic character psi_m.
struct CharacterIndex {
    std::int64_t m1, m2;
    CharacterIndex(std::int64_t m1_, std::int64_t m2_);
};

/// t_m = diag(m1, 1, m1*m2, m1^2*m2).
GSpElement t_m(const CharacterIndex& m);

/// Fractional part of m1*x + m2*c; the character value is e(psi_exponent).
Rat psi_exponent(const CharacterIndex& m, const UCoords& u);

/// Long-cell Bruhat data: g = left * J * diag(t1,t2,t3/t1,t3/t2) * right,
/// with `left` in the long-cell left layout and `right` in standard layout.
struct BruhatLongCell {
    UCoords left;
    Rat t1, t2, t3;
    UCoords right;
};

/// Extraction of the long-cell coordinates. Throws NotInLongCell when
/// det(C) = 0 or c22 = 0.
BruhatLongCell bruhat_long_cell(const GSpElement& g);

/// Reassemble the long-cell element from its Bruhat data.
GSpElement bruhat_long_cell_assemble(const BruhatLongCell& b);

/// Determinants of the three 2x2 minors Delta_1, Delta_2, Delta_3.
struct Minors {
    Rat d1, d2, d3;
};
Minors minors(const Mat4& g);
inline Minors minors(const GSpElement& g) { return minors(g.mat()); }

/// True iff sigma^{-1} u sigma lies in U.
bool u_sigma_member(WeylTag sigma, const UCoords& u);

/// Free-coordinate pattern of U_sigma: which of (x,a,b,c) may be nonzero.
struct USigmaPattern {
    bool x, a, b, c;
    int dim() const { return int(x) + int(a) + int(b) + int(c); }
};
USigmaPattern u_sigma_pattern(WeylTag sigma);

/// Closed-form relevant-orbit classifier (one case per Weyl element).
bool relevant_orbit(WeylTag sigma, const TorusRep& delta,
                    const CharacterIndex& m1, const CharacterIndex& m2);

/// Independent oracle: checks triviality of psi_{m1} (x) conj(psi_{m2}) on the
/// stabilizer pairs (u, delta_sigma^{-1} u delta_sigma), u in U_sigma, by exact
/// linear-form comparison on a spanning set of U_sigma.
bool relevant_check_by_conjugation(WeylTag sigma, const TorusRep& delta,
                                   const CharacterIndex& m1, const CharacterIndex& m2);

} // namespace gsp4
