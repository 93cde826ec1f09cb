#pragma once

// Double-coset enumeration for the three non-identity Bruhat cells that admit
// Kloosterman sums, and the generalized twisted sums over them.
//
// A cell element is parametrized exactly as
//     g = v(x1,a1,b1,c1) * sigma * diag(t1,t2,t3/t1,t3/t2) * r
// where v is the long-cell left layout, sigma in {J, s1s2s1, s2s1s2}, and the
// right factor r runs over U (cell J), {u(x,a,b,0)} (cell 121) or
// {u(0,a,b,c)} (cell 212).  The torus is pinned by the cell invariants:
//     J:   (d/s,  s,  m s/d, m/s)    det C = d,    c22 = -s
//     121: (s m/d, s, d/s,   m/s)    det D2 = d,   c22 = -s, det C = 0
//     212: (s,   d/s, m/s,  m s/d)   det C = -d,   c21 = -s, c22 = 0
// Integrality forces the coordinates into finite lattices; each double coset
// has exactly one representative with all coordinates in [0,1).

#include <cstdint>
#include <optional>
#include <vector>

#include "gsp4/dirichlet.hpp"
#include "gsp4/exact.hpp"

namespace gsp4 {

enum class CellTag { LongWeyl, W121, W212 };

const char* cell_name(CellTag c);
WeylTag cell_weyl(CellTag c);

struct KloostermanSpec {
    CellTag cell;
    std::int64_t N;      // level; congruence pattern mod N with unit (2,2) entry
    std::int64_t s, d;   // cell invariants as above
    std::int64_t m;      // multiplier
    CharacterIndex m1, m2;
    DirichletChar omega; // modulus N
    std::int64_t budget = 64; // largest allowed |s*d|
};

struct CosetRep {
    Mat4 g;        // integer entries
    UCoords left;  // long-cell left layout
    UCoords right; // standard layout (c = 0 in cell 121, x = 0 in cell 212)
    Rat t1, t2, t3;
    std::int64_t a22_mod_N = 0;
};

/// Complete duplicate-free list of double-coset representatives, each with
/// all coordinates in [shift, 1+shift). Throws UnsupportedScale over budget.
std::vector<CosetRep> enumerate_cell(const KloostermanSpec& spec, const Rat& shift = Rat(0));

/// The summand at one representative, read off the matrix entries only.
cplx kloos_summand(const KloostermanSpec& spec, const Mat4& g);

/// Generalized twisted Kloosterman sum over the cell.
cplx kloos_sum(const KloostermanSpec& spec);
cplx kloos_sum(const KloostermanSpec& spec, const std::vector<CosetRep>& classes);

/// Reduce an arbitrary element of the cell to its canonical representative.
/// Throws InvalidSpec if g does not satisfy the cell constraints.
CosetRep canonicalize(const KloostermanSpec& spec, const Mat4& g);

/// Left/right coset perturbation g -> u * g * u' by integral factors
/// (u' ranges over the cell's right quotient group).
Mat4 perturb_class(const KloostermanSpec& spec, const Mat4& g,
                   const UCoords& left_int, const UCoords& right_int);

/// Duplicate (x1, c1, x2, c2) mod-1 tuples across classes, if any
/// (exploratory injectivity check; a nonempty result is a logged finding).
std::vector<std::pair<int, int>> invariant_tuple_collisions(const std::vector<CosetRep>& classes);

} // namespace gsp4
