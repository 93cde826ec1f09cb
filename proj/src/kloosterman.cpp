#include "gsp4/kloosterman.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace gsp4 {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Vec4 {
    Rat v[4];
};

Vec4 col_of(const Mat4& m, int j) {
    return {m.at(0, j), m.at(1, j), m.at(2, j), m.at(3, j)};
}

Vec4 axpy(const Rat& a, const Vec4& x, const Vec4& y) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r.v[i] = a * x.v[i] + y.v[i];
    return r;
}

bool integral(const Rat& q) { return rat_den(q) == 1; }

std::int64_t mod_n(const Rat& q, std::int64_t N) {
    Int r = rat_num(q) % N;
    std::int64_t v = static_cast<std::int64_t>(r);
    return v < 0 ? v + N : v;
}

// congruence requirements per entry: 0 = free, 1 = must be 0 mod N, 2 = unit mod N
constexpr int kPattern[4][4] = {
    {0, 1, 0, 0},
    {0, 2, 0, 0},
    {1, 1, 0, 0},
    {1, 1, 1, 0},
};

bool entry_ok(const Rat& q, int i, int j, std::int64_t N) {
    if (!integral(q)) return false;
    if (N == 1) return true;
    int p = kPattern[i][j];
    if (p == 1) return mod_n(q, N) == 0;
    if (p == 2) return std::gcd(mod_n(q, N), N) == 1;
    return true;
}

bool col_ok(const Vec4& c, int j, std::int64_t N) {
    for (int i = 0; i < 4; ++i)
        if (!entry_ok(c.v[i], i, j, N)) return false;
    return true;
}

Mat4 cell_torus(const KloostermanSpec& sp) {
    Rat s(sp.s), d(sp.d), m(sp.m);
    switch (sp.cell) {
        case CellTag::LongWeyl: return Mat4::diagonal(d / s, s, m * s / d, m / s);
        case CellTag::W121:     return Mat4::diagonal(s * m / d, s, d / s, m / s);
        case CellTag::W212:     return Mat4::diagonal(s, d / s, m / s, m * s / d);
    }
    throw std::logic_error("cell_torus");
}

// lattice steps for (x,a,b,c), left and right factors
struct Lattices {
    Rat lx, la, lb, lc;
    Rat rx, ra, rb, rc; // a zero step means the coordinate is pinned to 0
};

Lattices cell_lattices(const KloostermanSpec& sp) {
    Rat is(1, std::abs(sp.s)), id(1, std::abs(sp.d));
    switch (sp.cell) {
        case CellTag::LongWeyl: return {is, is, is, id, is, is, is, id};
        case CellTag::W121:     return {is, is, is, id, is, is, is, Rat(0)};
        case CellTag::W212: {
            Rat sd = Rat(std::abs(sp.s), std::abs(sp.d));
            return {is, is, is, sd, Rat(0), is, id, is};
        }
    }
    throw std::logic_error("cell_lattices");
}

std::vector<Rat> lattice_window(const Rat& step, const Rat& shift) {
    std::vector<Rat> out;
    if (step == 0) { out.push_back(Rat(0)); return out; }
    // smallest multiple of step that is >= shift
    Rat q = shift / step;
    Int k = rat_floor(q);
    if (Rat(k) * step < shift) k += 1;
    for (Rat v = Rat(k) * step; v < shift + 1; v += step) out.push_back(v);
    return out;
}

Mat4 left_times(const UCoords& u, const Mat4& B) {
    // v(x,a,b,c) * B with v in the long-cell left layout
    Mat4 r;
    Rat acx = u.a + u.c * u.x;
    for (int j = 0; j < 4; ++j) {
        r.at(0, j) = B.at(0, j) + u.c * B.at(2, j) + u.a * B.at(3, j);
        r.at(1, j) = u.x * B.at(0, j) + B.at(1, j) + acx * B.at(2, j) + u.b * B.at(3, j);
        r.at(2, j) = B.at(2, j) - u.x * B.at(3, j);
        r.at(3, j) = B.at(3, j);
    }
    return r;
}

void check_spec(const KloostermanSpec& sp) {
    if (sp.N < 1 || sp.s == 0 || sp.d == 0 || sp.m == 0)
        throw InvalidSpec("KloostermanSpec: need N >= 1 and nonzero s, d, m");
    if (sp.omega.modulus() != sp.N)
        throw InvalidSpec("KloostermanSpec: omega modulus must equal N");
    if (std::abs(sp.s) * std::abs(sp.d) > sp.budget)
        throw UnsupportedScale("enumerate_cell: |s*d| exceeds the enumeration budget");
}

} // namespace

const char* cell_name(CellTag c) {
    switch (c) {
        case CellTag::LongWeyl: return "J";
        case CellTag::W121: return "121";
        case CellTag::W212: return "212";
    }
    return "?";
}

WeylTag cell_weyl(CellTag c) {
    switch (c) {
        case CellTag::LongWeyl: return WeylTag::J;
        case CellTag::W121: return WeylTag::S1S2S1;
        case CellTag::W212: return WeylTag::S2S1S2;
    }
    throw std::logic_error("cell_weyl");
}

std::vector<CosetRep> enumerate_cell(const KloostermanSpec& sp, const Rat& shift) {
    check_spec(sp);
    std::vector<CosetRep> out;
    if (sp.cell == CellTag::W212 && sp.d % sp.s != 0)
        return out; // (3,2) entry is -d/s; never integral otherwise

    const Mat4 torus = cell_torus(sp);
    const Mat4 base = weyl_matrix(cell_weyl(sp.cell)) * torus;
    const Lattices lat = cell_lattices(sp);
    const std::int64_t N = sp.N;

    const auto xs1 = lattice_window(lat.lx, shift);
    const auto as1 = lattice_window(lat.la, shift);
    const auto bs1 = lattice_window(lat.lb, shift);
    const auto cs1 = lattice_window(lat.lc, shift);
    const auto xs2 = lattice_window(lat.rx, shift);
    const auto as2 = lattice_window(lat.ra, shift);
    const auto bs2 = lattice_window(lat.rb, shift);
    const auto cs2 = lattice_window(lat.rc, shift);

    for (const Rat& c1 : cs1)
    for (const Rat& x1 : xs1)
    for (const Rat& a1 : as1)
    for (const Rat& b1 : bs1) {
        UCoords left{x1, a1, b1, c1};
        Mat4 L = left_times(left, base);
        Vec4 L0 = col_of(L, 0), L1 = col_of(L, 1), L2 = col_of(L, 2), L3 = col_of(L, 3);
        // g.col2 = L.col2 for every right factor
        if (!col_ok(L1, 1, N)) continue;

        // right-factor column combinations, checked column by column
        struct XEntry { Rat x; Vec4 c0; };
        std::vector<XEntry> xcands;
        for (const Rat& x2 : xs2) {
            Vec4 c0 = axpy(x2, L1, L0);
            if (col_ok(c0, 0, N)) xcands.push_back({x2, c0});
        }
        if (xcands.empty()) continue;

        struct ACEntry { Rat a, c; Vec4 c2; };
        std::vector<ACEntry> accands;
        for (const Rat& a2 : as2)
        for (const Rat& c2v : cs2) {
            Vec4 c2col = axpy(c2v, L0, axpy(a2, L1, L2));
            if (col_ok(c2col, 2, N)) accands.push_back({a2, c2v, c2col});
        }
        if (accands.empty()) continue;

        for (const XEntry& xe : xcands)
        for (const ACEntry& ae : accands) {
            // g.col4 = (a2 - c2 x2) L0 + b2 L1 - x2 L2 + L3
            Vec4 partial = axpy(ae.a - ae.c * xe.x, L0, axpy(-xe.x, L2, L3));
            for (const Rat& b2 : bs2) {
                Vec4 c3 = axpy(b2, L1, partial);
                if (!col_ok(c3, 3, N)) continue;
                CosetRep rep;
                rep.left = left;
                rep.right = {xe.x, ae.a, b2, ae.c};
                Mat4 g;
                for (int i = 0; i < 4; ++i) {
                    g.at(i, 0) = xe.c0.v[i];
                    g.at(i, 1) = L1.v[i];
                    g.at(i, 2) = ae.c2.v[i];
                    g.at(i, 3) = c3.v[i];
                }
                rep.g = g;
                rep.t1 = torus.at(0, 0);
                rep.t2 = torus.at(1, 1);
                rep.t3 = Rat(sp.m);
                rep.a22_mod_N = mod_n(g.at(1, 1), N);
                out.push_back(std::move(rep));
            }
        }
    }
    return out;
}

cplx kloos_summand(const KloostermanSpec& sp, const Mat4& g) {
    Minors mm = minors(g);
    Rat s(sp.s), d(sp.d);
    Rat expo;
    switch (sp.cell) {
        case CellTag::LongWeyl:
            expo = (Rat(sp.m1.m1) * g.at(2, 1) + Rat(sp.m2.m1) * g.at(3, 0)) / s +
                   (Rat(sp.m1.m2) * mm.d1 + Rat(sp.m2.m2) * mm.d2) / d;
            break;
        case CellTag::W121:
            expo = (Rat(sp.m1.m1) * g.at(2, 1) + Rat(sp.m2.m1) * g.at(3, 0)) / s +
                   Rat(sp.m1.m2) * mm.d3 / d;
            break;
        case CellTag::W212:
            expo = (Rat(sp.m1.m1) * g.at(2, 0) + Rat(sp.m2.m2) * g.at(3, 2)) / s -
                   Rat(sp.m1.m2) * mm.d1 / d;
            break;
    }
    double phase = static_cast<double>(frac_mod1(expo).convert_to<double>());
    return sp.omega.bar(mod_n(g.at(1, 1), sp.N)) * std::polar(1.0, kTwoPi * phase);
}

cplx kloos_sum(const KloostermanSpec& sp, const std::vector<CosetRep>& classes) {
    cplx acc = 0.0;
    for (const CosetRep& r : classes) acc += kloos_summand(sp, r.g);
    return acc;
}

cplx kloos_sum(const KloostermanSpec& sp) { return kloos_sum(sp, enumerate_cell(sp)); }

namespace {

UCoords reduce_left(const UCoords& u) {
    // left multiplication by u_std(X,A,B,C) acts on the v-layout coordinates as
    // (x,a,b,c) -> (x+X, a+A-C(x+X), b+B+Xa-Ax, c+C)
    Rat X = -Rat(rat_floor(u.x));
    Rat C = -Rat(rat_floor(u.c));
    Rat x2 = u.x + X, c2 = u.c + C;
    Rat abase = u.a - C * x2;
    Rat A = -Rat(rat_floor(abase));
    Rat a2 = abase + A;
    Rat bbase = u.b + X * u.a - A * u.x;
    Rat B = -Rat(rat_floor(bbase));
    return {x2, a2, bbase + B, c2};
}

UCoords reduce_right(CellTag cell, const UCoords& u) {
    // right multiplication by the cell's right quotient group:
    //   J:   (x,a,b,c) -> (x+X, a+A+xC, b+B+xA-aX-xXC, c+C)
    //   121: (x,a,b,0) -> (x+X, a+A, b+B+xA-aX, 0)
    //   212: (0,a,b,c) -> (0, a+A, b+B, c+C)
    Rat X = -Rat(rat_floor(u.x));
    Rat C = -Rat(rat_floor(u.c));
    if (cell == CellTag::W121) C = 0;
    if (cell == CellTag::W212) X = 0;
    Rat x2 = u.x + X, c2 = u.c + C;
    Rat abase = u.a + (cell == CellTag::LongWeyl ? u.x * C : Rat(0));
    Rat A = -Rat(rat_floor(abase));
    Rat a2 = abase + A;
    Rat bbase = u.b + u.x * A - u.a * X - (cell == CellTag::LongWeyl ? u.x * X * C : Rat(0));
    Rat B = -Rat(rat_floor(bbase));
    return {x2, a2, bbase + B, c2};
}

} // namespace

CosetRep canonicalize(const KloostermanSpec& sp, const Mat4& g) {
    Rat mu = multiplier(g);
    if (mu != Rat(sp.m)) throw InvalidSpec("canonicalize: multiplier mismatch");
    Minors mm = minors(g);
    const Rat c11 = g.at(2, 0), c12 = g.at(2, 1), c21 = g.at(3, 0), c22 = g.at(3, 1);
    Rat detC = c11 * c22 - c12 * c21;
    UCoords left, right;
    switch (sp.cell) {
        case CellTag::LongWeyl: {
            if (c22 != Rat(-sp.s) || detC != Rat(sp.d))
                throw InvalidSpec("canonicalize: not in the long cell slice");
            left = {-c12 / c22, g.at(0, 1) / c22, g.at(1, 1) / c22, mm.d1 / detC};
            right = {c21 / c22, g.at(3, 2) / c22, g.at(3, 3) / c22, -mm.d2 / detC};
            break;
        }
        case CellTag::W121: {
            if (c22 != Rat(-sp.s) || detC != 0 || mm.d2 != Rat(sp.d))
                throw InvalidSpec("canonicalize: not in the 121 slice");
            left = {-c12 / c22, g.at(0, 1) / c22, g.at(1, 1) / c22, mm.d3 / mm.d2};
            right = {c21 / c22, g.at(3, 2) / c22, g.at(3, 3) / c22, Rat(0)};
            break;
        }
        case CellTag::W212: {
            if (c21 != Rat(-sp.s) || c22 != 0 || detC != Rat(-sp.d))
                throw InvalidSpec("canonicalize: not in the 212 slice");
            Rat t1 = -c21, t2 = -detC / t1;
            left = {-c11 / c21, -g.at(0, 0) / t1, -g.at(1, 0) / t1, -mm.d1 / (t1 * t2)};
            Rat a2 = -g.at(3, 3) / t1;
            right = {Rat(0), a2, (a2 * t1 * left.x - g.at(2, 3)) / t2, -g.at(3, 2) / t1};
            break;
        }
    }
    CosetRep rep;
    rep.left = reduce_left(left);
    rep.right = reduce_right(sp.cell, right);
    Mat4 t = cell_torus(sp);
    rep.t1 = t.at(0, 0);
    rep.t2 = t.at(1, 1);
    rep.t3 = Rat(sp.m);
    rep.g = left_times(rep.left, weyl_matrix(cell_weyl(sp.cell)) * t) * u_matrix_raw(rep.right);
    if (!rep.g.is_integral())
        throw std::logic_error("canonicalize: canonical representative not integral");
    rep.a22_mod_N = mod_n(rep.g.at(1, 1), sp.N);
    return rep;
}

Mat4 perturb_class(const KloostermanSpec& sp, const Mat4& g,
                   const UCoords& left_int, const UCoords& right_int) {
    UCoords r = right_int;
    if (sp.cell == CellTag::W121) r.c = 0;
    if (sp.cell == CellTag::W212) r.x = 0;
    return u_matrix_raw(left_int) * g * u_matrix_raw(r);
}

std::vector<std::pair<int, int>> invariant_tuple_collisions(const std::vector<CosetRep>& classes) {
    std::vector<std::pair<int, int>> dup;
    std::map<std::array<Rat, 4>, int> seen;
    for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
        const CosetRep& r = classes[static_cast<size_t>(i)];
        std::array<Rat, 4> key{frac_mod1(r.left.x), frac_mod1(r.left.c),
                               frac_mod1(r.right.x), frac_mod1(r.right.c)};
        auto [it, fresh] = seen.emplace(key, i);
        if (!fresh) dup.emplace_back(it->second, i);
    }
    return dup;
}

} // namespace gsp4
