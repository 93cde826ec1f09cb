#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gsp4/errors.hpp"

namespace gsp4 {

using cplx = std::complex<double>;

/// Dirichlet character mod N given by a value table: completely multiplicative
/// on units, zero on non-units, chi(1) = 1. Primitivity is not required.
class DirichletChar {
public:
    /// Principal character mod N (1 on units, 0 elsewhere).
    static DirichletChar trivial(std::int64_t modulus);

    /// Character from an explicit value table of length N (index = residue).
    /// Validates unit support, chi(1) = 1, and complete multiplicativity.
    static DirichletChar from_values(std::int64_t modulus, std::vector<cplx> values);

    /// Quadratic character mod an odd prime p (Legendre symbol).
    static DirichletChar legendre(std::int64_t p);

    std::int64_t modulus() const { return modulus_; }

    /// chi(n) for any integer n (reduced mod N; for N = 1 this is always 1).
    cplx operator()(std::int64_t n) const;

    /// conj(chi)(n)
    cplx bar(std::int64_t n) const { return std::conj((*this)(n)); }

private:
    DirichletChar(std::int64_t modulus, std::vector<cplx> values);
    std::int64_t modulus_;
    std::vector<cplx> values_;
};

} // namespace gsp4
