#pragma once

// The elementary double sum S(a,b,d,N) = sum_{x,y mod N, d | xy} e((ax+by)/N),
// its prime-power closed form, and the identity-orbit contribution built
// from it, together with the finite residue-sum oracle used to validate it.

#include <complex>
#include <cstdint>
#include <optional>

#include "gsp4/dirichlet.hpp"
#include "gsp4/exact.hpp"

namespace gsp4 {

struct ElementarySumSpec {
    std::int64_t a, b;
    std::int64_t d, N; // d | N, both positive
};

/// Direct double loop over x,y mod N. Result is a real integer up to
/// floating-point error; the imaginary part is tracked and validated.
cplx S_bruteforce(const ElementarySumSpec& spec);

/// Closed form of S(p^i, p^j, p^k, p^n). Requires k <= n.
std::int64_t S_primepower(std::int64_t i, std::int64_t j, std::int64_t k,
                          std::int64_t n, std::int64_t p);

/// Exact evaluation of S(a,b,d,N) by CRT factorization into prime powers,
/// with v_p(0) capped at v_p(N).
std::int64_t S_closed(const ElementarySumSpec& spec);

/// Debug hook for the selftest mutation check: when enabled, S_primepower
/// returns a deliberately sign-flipped second term.
void set_sum_debug_flip(bool enabled);

struct IdentityContribution {
    bool nonzero = false;
    std::int64_t s = 0;       // canonical positive choice
    std::int64_t t = 0;       // t = s*d1
    std::int64_t d = 0;       // gcd(D, |D/d1|)
    std::int64_t D = 0;       // gcd(|t|, n/s)
    std::int64_t sum_term = 0; // S(m11 n/D, m12 s d1, d, n)
    cplx value = 0.0;         // omega_N(s)^bar * (n d / |s^3 d1|) * sum_term
    bool d_definitions_agree = true; // audit: gcd(D, D/d1) vs gcd(s, n/s, t, n/t)
};

/// Identity-orbit contribution; gcd(n, N) = 1 and omega mod N required.
/// The global volume normalization is NOT included (reported separately).
IdentityContribution identity_contribution(std::int64_t n, std::int64_t N,
                                           const CharacterIndex& m1,
                                           const CharacterIndex& m2,
                                           const DirichletChar& omega);

/// Finite residue-sum oracle: the triple sum over a mod D/d1 and
/// x,y mod sD with xy = Da (mod D/d1), with the same normalization.
/// Throws ConditionsNotMet when the nonzero-case conditions fail.
cplx identity_contribution_oracle(std::int64_t n, std::int64_t N,
                                  const CharacterIndex& m1,
                                  const CharacterIndex& m2,
                                  const DirichletChar& omega);

} // namespace gsp4
