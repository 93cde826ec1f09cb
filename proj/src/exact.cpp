#include "gsp4/exact.hpp"

#include <ostream>
#include <sstream>

namespace gsp4 {

Rat frac_mod1(const Rat& q) {
    Rat f = q - Rat(rat_floor(q));
    return f;
}

Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q); // d > 0 by normalization
    Int quo = n / d;
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

Mat4 Mat4::zero() { return Mat4{}; }

Mat4 Mat4::identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m.at(i, i) = 1;
    return m;
}

Mat4 Mat4::diagonal(const Rat& d0, const Rat& d1, const Rat& d2, const Rat& d3) {
    Mat4 m;
    m.at(0, 0) = d0; m.at(1, 1) = d1; m.at(2, 2) = d2; m.at(3, 3) = d3;
    return m;
}

Mat4 Mat4::operator*(const Mat4& rhs) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < 4; ++j) {
                if (rhs.at(k, j) == 0) continue;
                r.at(i, j) += v * rhs.at(k, j);
            }
        }
    return r;
}

Mat4 Mat4::operator+(const Mat4& rhs) const {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e_[i] = e_[i] + rhs.e_[i];
    return r;
}

Mat4 Mat4::operator-(const Mat4& rhs) const {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e_[i] = e_[i] - rhs.e_[i];
    return r;
}

Mat4 Mat4::scaled(const Rat& z) const {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e_[i] = e_[i] * z;
    return r;
}

Mat4 Mat4::transposed() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
    return r;
}

Rat Mat4::det() const {
    // cofactor expansion via 2x2 complements
    auto m2 = [&](int r0, int r1, int c0, int c1) {
        return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
    };
    Rat d = 0;
    d += m2(0, 1, 0, 1) * m2(2, 3, 2, 3);
    d -= m2(0, 1, 0, 2) * m2(2, 3, 1, 3);
    d += m2(0, 1, 0, 3) * m2(2, 3, 1, 2);
    d += m2(0, 1, 1, 2) * m2(2, 3, 0, 3);
    d -= m2(0, 1, 1, 3) * m2(2, 3, 0, 2);
    d += m2(0, 1, 2, 3) * m2(2, 3, 0, 1);
    return d;
}

Mat4 Mat4::inverse() const {
    // Gauss-Jordan with exact pivoting
    std::array<Rat, 32> w{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) w[8 * i + j] = at(i, j);
    for (int i = 0; i < 4; ++i) w[8 * i + 4 + i] = 1;

    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (w[8 * r + col] != 0) { piv = r; break; }
        if (piv < 0) throw std::domain_error("Mat4::inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < 8; ++j) std::swap(w[8 * piv + j], w[8 * col + j]);
        Rat p = w[8 * col + col];
        for (int j = 0; j < 8; ++j) w[8 * col + j] /= p;
        for (int r = 0; r < 4; ++r) {
            if (r == col || w[8 * r + col] == 0) continue;
            Rat f = w[8 * r + col];
            for (int j = 0; j < 8; ++j) w[8 * r + j] -= f * w[8 * col + j];
        }
    }
    Mat4 inv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv.at(i, j) = w[8 * i + 4 + j];
    return inv;
}

bool Mat4::is_integral() const {
    for (const Rat& q : e_)
        if (rat_den(q) != 1) return false;
    return true;
}

std::string Mat4::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat4& m) {
    for (int i = 0; i < 4; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (int j = 0; j < 4; ++j) os << m.at(i, j) << (j < 3 ? ", " : "");
        os << "]" << (i == 3 ? "]" : "\n");
    }
    return os;
}

const Mat4& form_J() {
    static const Mat4 J = [] {
        Mat4 m;
        m.at(0, 2) = 1; m.at(1, 3) = 1; m.at(2, 0) = -1; m.at(3, 1) = -1;
        return m;
    }();
    return J;
}

Rat multiplier(const Mat4& g) {
    Mat4 w = g.transposed() * form_J() * g;
    Rat mu = w.at(0, 2);
    if (w != form_J().scaled(mu) || mu == 0)
        throw NotSymplectic("multiplier: tgJg is not a nonzero multiple of J");
    return mu;
}

GSpElement::GSpElement(Mat4 m) : m_(std::move(m)), mu_(multiplier(m_)) {}

GSpElement GSpElement::operator*(const GSpElement& rhs) const {
    return GSpElement(m_ * rhs.m_);
}

GSpElement GSpElement::inverse() const { return GSpElement(m_.inverse()); }

Mat4 u_matrix_raw(const UCoords& u) {
    Mat4 m = Mat4::identity();
    m.at(0, 2) = u.c;
    m.at(0, 3) = u.a - u.c * u.x;
    m.at(1, 0) = u.x;
    m.at(1, 2) = u.a;
    m.at(1, 3) = u.b;
    m.at(2, 3) = -u.x;
    return m;
}

GSpElement u_matrix(const UCoords& u) { return GSpElement(u_matrix_raw(u)); }

Mat4 long_cell_left_raw(const UCoords& u) {
    return u_matrix_raw({u.x, u.a + u.c * u.x, u.b, u.c});
}

UCoords u_coords(const Mat4& g) {
    UCoords u{g.at(1, 0), g.at(1, 2), g.at(1, 3), g.at(0, 2)};
    if (g != u_matrix_raw(u)) throw NotInU("u_coords: matrix not in U");
    return u;
}

TorusRep::TorusRep(Rat d1_, Rat d2_) : d1(std::move(d1_)), d2(std::move(d2_)) {
    if (d1 == 0 || d2 == 0) throw InvalidSpec("TorusRep: d1, d2 must be nonzero");
}

GSpElement TorusRep::matrix() const {
    return GSpElement(Mat4::diagonal(d1, 1, d2, d1 * d2));
}

namespace {

Mat4 weyl_s1() {
    Mat4 m;
    m.at(0, 1) = 1; m.at(1, 0) = 1; m.at(2, 3) = 1; m.at(3, 2) = 1;
    return m;
}

Mat4 weyl_s2() {
    Mat4 m;
    m.at(0, 2) = 1; m.at(1, 1) = 1; m.at(2, 0) = -1; m.at(3, 3) = 1;
    return m;
}

} // namespace

const Mat4& weyl_matrix(WeylTag tag) {
    static const std::array<Mat4, 8> table = [] {
        Mat4 s1 = weyl_s1(), s2 = weyl_s2();
        return std::array<Mat4, 8>{
            Mat4::identity(), s1, s2, s1 * s2, s2 * s1,
            s1 * s2 * s1, s2 * s1 * s2, s1 * s2 * s1 * s2};
    }();
    return table[static_cast<int>(tag)];
}

const char* weyl_name(WeylTag tag) {
    static const char* names[8] = {"1", "s1", "s2", "s1s2", "s2s1", "s1s2s1", "s2s1s2", "J"};
    return names[static_cast<int>(tag)];
}

CharacterIndex::CharacterIndex(std::int64_t m1_, std::int64_t m2_) : m1(m1_), m2(m2_) {
    if (m1 == 0 || m2 == 0) throw InvalidSpec("CharacterIndex: entries must be nonzero");
}

GSpElement t_m(const CharacterIndex& m) {
    Rat m1(m.m1), m2(m.m2);
    return GSpElement(Mat4::diagonal(m1, 1, m1 * m2, m1 * m1 * m2));
}

Rat psi_exponent(const CharacterIndex& m, const UCoords& u) {
    return frac_mod1(Rat(m.m1) * u.x + Rat(m.m2) * u.c);
}

BruhatLongCell bruhat_long_cell(const GSpElement& g) {
    const Mat4& M = g.mat();
    const Rat& c11 = M.at(2, 0), c12 = M.at(2, 1), c21 = M.at(3, 0), c22 = M.at(3, 1);
    Rat detC = c11 * c22 - c12 * c21;
    if (detC == 0 || c22 == 0)
        throw NotInLongCell("bruhat_long_cell: det(C) = 0 or c22 = 0");

    Minors mm = minors(g);
    BruhatLongCell b;
    b.t3 = g.mu();
    b.t2 = -c22;
    b.t1 = detC / b.t2;
    b.left.x = -c12 / c22;
    b.right.x = c21 / c22;
    b.left.c = mm.d1 / detC;
    b.right.c = -mm.d2 / detC;
    b.left.a = M.at(0, 1) / c22;
    b.right.a = M.at(3, 2) / c22;
    b.left.b = M.at(1, 1) / c22;
    b.right.b = M.at(3, 3) / c22;
    return b;
}

GSpElement bruhat_long_cell_assemble(const BruhatLongCell& b) {
    Mat4 t = Mat4::diagonal(b.t1, b.t2, b.t3 / b.t1, b.t3 / b.t2);
    return GSpElement(long_cell_left_raw(b.left) * form_J() * t * u_matrix_raw(b.right));
}

Minors minors(const Mat4& g) {
    Minors m;
    m.d1 = g.at(0, 0) * g.at(3, 1) - g.at(0, 1) * g.at(3, 0);
    m.d2 = g.at(2, 1) * g.at(3, 2) - g.at(2, 2) * g.at(3, 1);
    m.d3 = g.at(0, 1) * g.at(3, 2) - g.at(0, 2) * g.at(3, 1);
    return m;
}

bool u_sigma_member(WeylTag sigma, const UCoords& u) {
    const Mat4& s = weyl_matrix(sigma);
    Mat4 conj = s.inverse() * u_matrix_raw(u) * s;
    try {
        (void)u_coords(conj);
        return true;
    } catch (const NotInU&) {
        return false;
    }
}

USigmaPattern u_sigma_pattern(WeylTag sigma) {
    switch (sigma) {
        case WeylTag::One:    return {true, true, true, true};
        case WeylTag::S1:     return {false, true, true, true};
        case WeylTag::S2:     return {true, true, true, false};
        case WeylTag::S1S2:   return {false, true, false, true};
        case WeylTag::S2S1:   return {true, false, true, false};
        case WeylTag::S1S2S1: return {false, false, false, true};
        case WeylTag::S2S1S2: return {true, false, false, false};
        case WeylTag::J:      return {false, false, false, false};
    }
    throw std::logic_error("u_sigma_pattern: bad tag");
}

bool relevant_orbit(WeylTag sigma, const TorusRep& delta,
                    const CharacterIndex& m1, const CharacterIndex& m2) {
    Rat m11(m1.m1), m12(m1.m2), m21(m2.m1), m22(m2.m2);
    switch (sigma) {
        case WeylTag::One:
            return delta.d1 == m11 / m21 && delta.d2 == m11 * m12 / (m21 * m22);
        case WeylTag::S1S2S1:
            return delta.d1 * m12 == delta.d2 * m22;
        case WeylTag::S2S1S2:
            return m11 == -delta.d1 * m21;
        case WeylTag::J:
            return true;
        default:
            return false;
    }
}

bool relevant_check_by_conjugation(WeylTag sigma, const TorusRep& delta,
                                   const CharacterIndex& m1, const CharacterIndex& m2) {
    const Mat4& s = weyl_matrix(sigma);
    Mat4 ds = s * delta.matrix().mat();      // delta_sigma = sigma * delta_1
    Mat4 ds_inv = ds.inverse();
    USigmaPattern pat = u_sigma_pattern(sigma);

    // Spanning set: each free coordinate direction with a generic rational
    // value, plus combined points to catch cross terms.
    const Rat g1(3, 7), g2(5, 11), g3(2, 13), g4(7, 17);
    std::array<UCoords, 6> samples;
    int n = 0;
    auto mask = [&](const Rat& vx, const Rat& va, const Rat& vb, const Rat& vc) {
        return UCoords{pat.x ? vx : Rat(0), pat.a ? va : Rat(0),
                       pat.b ? vb : Rat(0), pat.c ? vc : Rat(0)};
    };
    samples[n++] = mask(g1, 0, 0, 0);
    samples[n++] = mask(0, g2, 0, 0);
    samples[n++] = mask(0, 0, g3, 0);
    samples[n++] = mask(0, 0, 0, g4);
    samples[n++] = mask(g1, g2, g3, g4);
    samples[n++] = mask(g4, g3, g2, g1);

    for (int i = 0; i < n; ++i) {
        const UCoords& u = samples[i];
        Mat4 conj = ds_inv * u_matrix_raw(u) * ds;
        UCoords v;
        try {
            v = u_coords(conj);
        } catch (const NotInU&) {
            return false; // not even stable: the pair is not in the stabilizer
        }
        Rat lhs = Rat(m1.m1) * u.x + Rat(m1.m2) * u.c;
        Rat rhs = Rat(m2.m1) * v.x + Rat(m2.m2) * v.c;
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace gsp4
