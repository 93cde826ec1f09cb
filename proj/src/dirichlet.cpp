#include "gsp4/dirichlet.hpp"

#include <cmath>
#include <numeric>

namespace gsp4 {

DirichletChar::DirichletChar(std::int64_t modulus, std::vector<cplx> values)
    : modulus_(modulus), values_(std::move(values)) {}

DirichletChar DirichletChar::trivial(std::int64_t modulus) {
    if (modulus < 1) throw InvalidSpec("DirichletChar: modulus must be >= 1");
    std::vector<cplx> v(static_cast<size_t>(modulus), cplx(0.0));
    for (std::int64_t r = 0; r < modulus; ++r)
        if (std::gcd(r, modulus) == 1) v[static_cast<size_t>(r)] = cplx(1.0);
    if (modulus == 1) v[0] = cplx(1.0);
    return DirichletChar(modulus, std::move(v));
}

DirichletChar DirichletChar::from_values(std::int64_t modulus, std::vector<cplx> values) {
    if (modulus < 1) throw InvalidSpec("DirichletChar: modulus must be >= 1");
    if (values.size() != static_cast<size_t>(modulus))
        throw InvalidSpec("DirichletChar: table length must equal the modulus");
    const double tol = 1e-9;
    if (modulus == 1) {
        if (std::abs(values[0] - cplx(1.0)) > tol)
            throw InvalidSpec("DirichletChar: chi(0 mod 1) must be 1");
        return DirichletChar(1, std::move(values));
    }
    for (std::int64_t r = 0; r < modulus; ++r) {
        bool unit = std::gcd(r, modulus) == 1;
        double av = std::abs(values[static_cast<size_t>(r)]);
        if (unit && std::abs(av - 1.0) > tol)
            throw InvalidSpec("DirichletChar: values on units must be complex units");
        if (!unit && av > tol)
            throw InvalidSpec("DirichletChar: values on non-units must be 0");
    }
    if (std::abs(values[1] - cplx(1.0)) > tol)
        throw InvalidSpec("DirichletChar: chi(1) must be 1");
    for (std::int64_t a = 0; a < modulus; ++a)
        for (std::int64_t b = a; b < modulus; ++b) {
            cplx lhs = values[static_cast<size_t>((a * b) % modulus)];
            cplx rhs = values[static_cast<size_t>(a)] * values[static_cast<size_t>(b)];
            if (std::abs(lhs - rhs) > tol)
                throw InvalidSpec("DirichletChar: table is not completely multiplicative");
        }
    return DirichletChar(modulus, std::move(values));
}

DirichletChar DirichletChar::legendre(std::int64_t p) {
    if (p < 3 || p % 2 == 0) throw InvalidSpec("DirichletChar::legendre: p must be an odd prime");
    std::vector<cplx> v(static_cast<size_t>(p), cplx(0.0));
    for (std::int64_t r = 1; r < p; ++r)
        v[static_cast<size_t>((r * r) % p)] = cplx(1.0);
    for (std::int64_t r = 1; r < p; ++r)
        if (v[static_cast<size_t>(r)] == cplx(0.0)) v[static_cast<size_t>(r)] = cplx(-1.0);
    return from_values(p, std::move(v));
}

cplx DirichletChar::operator()(std::int64_t n) const {
    if (modulus_ == 1) return cplx(1.0);
    std::int64_t r = n % modulus_;
    if (r < 0) r += modulus_;
    return values_[static_cast<size_t>(r)];
}

} // namespace gsp4
