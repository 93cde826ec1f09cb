#include "doctest.h"

#include <cmath>
#include <numeric>

#include "gsp4/elementary_sums.hpp"

using namespace gsp4;

namespace {

bool close(cplx a, cplx b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

std::int64_t brute_as_int(const ElementarySumSpec& s) {
    cplx v = S_bruteforce(s);
    REQUIRE(std::abs(v.imag()) < 1e-9 * (1.0 + std::abs(v.real())));
    return std::llround(v.real());
}

} // namespace

TEST_CASE("S_bruteforce hand values") {
    CHECK(close(S_bruteforce({1, 1, 1, 5}), cplx(0.0)));
    CHECK(close(S_bruteforce({5, 5, 1, 5}), cplx(25.0)));
    CHECK(close(S_bruteforce({1, 1, 5, 5}), cplx(-1.0)));
    CHECK_THROWS_AS(S_bruteforce({1, 1, 3, 5}), InvalidSpec);
}

TEST_CASE("S_primepower hand values and integer output") {
    CHECK(S_primepower(0, 0, 0, 1, 5) == 0);
    CHECK(S_primepower(1, 1, 0, 1, 5) == 25);
    CHECK(S_primepower(0, 0, 1, 1, 5) == -1);
    CHECK(S_primepower(0, 0, 0, 0, 7) == 1); // N-part = 1
    CHECK_THROWS_AS(S_primepower(0, 0, 2, 1, 5), InvalidSpec);
}

TEST_CASE("S_closed equals S_bruteforce for N <= 30") {
    for (std::int64_t N = 1; N <= 30; ++N)
        for (std::int64_t d = 1; d <= N; ++d) {
            if (N % d) continue;
            for (std::int64_t a = 0; a < N; ++a)
                for (std::int64_t b = 0; b < N; ++b) {
                    ElementarySumSpec s{a, b, d, N};
                    std::int64_t closed = S_closed(s);
                    REQUIRE(closed == brute_as_int(s));
                }
        }
}

TEST_CASE("S symmetries and the nonvanishing filter") {
    for (std::int64_t N : {12, 18, 20}) {
        for (std::int64_t d = 1; d <= N; ++d) {
            if (N % d) continue;
            for (std::int64_t a = 0; a < N; a += 3)
                for (std::int64_t b = 0; b < N; b += 2) {
                    CHECK(S_closed({a, b, d, N}) == S_closed({b, a, d, N}));
                    CHECK(S_closed({a, b, d, N}) == S_closed({a, -b, d, N}));
                }
        }
    }
    // filter: nonzero requires (n-i)+(n-j) <= k+1 at each prime
    CHECK(S_closed({1, 1, 1, 9}) == 0);  // i=j=0, k=0, n=2: 4 > 1
    CHECK(S_closed({3, 1, 3, 9}) == 0);  // i=1, j=0, k=1, n=2: 3 > 2
    CHECK(S_closed({3, 3, 3, 9}) != 0);  // i=j=1, k=1, n=2: 2 <= 2
}

TEST_CASE("debug flip breaks the oracle equality (mutation check)") {
    set_sum_debug_flip(true);
    bool mismatch = false;
    for (std::int64_t a = 0; a < 5 && !mismatch; ++a)
        for (std::int64_t b = 0; b < 5 && !mismatch; ++b)
            if (S_closed({a, b, 5, 5}) != brute_as_int({a, b, 5, 5})) mismatch = true;
    set_sum_debug_flip(false);
    CHECK(mismatch);
    CHECK(S_closed({1, 1, 5, 5}) == -1);
}

TEST_CASE("DirichletChar validation and evaluation") {
    DirichletChar t5 = DirichletChar::trivial(5);
    CHECK(close(t5(3), cplx(1.0)));
    CHECK(close(t5(10), cplx(0.0)));
    CHECK(close(t5(-1), cplx(1.0)));
    DirichletChar leg5 = DirichletChar::legendre(5);
    CHECK(close(leg5(2), cplx(-1.0)));
    CHECK(close(leg5(4), cplx(1.0)));
    CHECK(close(leg5(-1), cplx(1.0)));
    DirichletChar leg3 = DirichletChar::legendre(3);
    CHECK(close(leg3(-1), cplx(-1.0)));
    std::vector<cplx> bad = {cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0), cplx(-1.0)};
    CHECK_THROWS_AS(DirichletChar::from_values(5, bad), InvalidSpec);
}

TEST_CASE("identity contribution: trivial case and condition failures") {
    DirichletChar triv = DirichletChar::trivial(1);
    IdentityContribution c = identity_contribution(1, 1, {1, 1}, {1, 1}, triv);
    CHECK(c.nonzero);
    CHECK(c.s == 1);
    CHECK(c.d == 1);
    CHECK(c.D == 1);
    CHECK(c.sum_term == 1);
    CHECK(close(c.value, cplx(1.0)));
    CHECK(c.d_definitions_agree);

    IdentityContribution z = identity_contribution(1, 1, {1, 1}, {2, 1}, triv);
    CHECK_FALSE(z.nonzero);
    CHECK(close(z.value, cplx(0.0)));

    CHECK_THROWS_AS(identity_contribution(2, 2, {1, 1}, {1, 1}, DirichletChar::trivial(2)),
                    InvalidSpec);
}

TEST_CASE("identity contribution oracle: small grid at N = 1") {
    DirichletChar triv = DirichletChar::trivial(1);
    int nonzero_cases = 0;
    for (std::int64_t n = 1; n <= 12; ++n)
        for (std::int64_t m11 : {1, 2, 3, -2})
            for (std::int64_t m12 : {1, 2, -3})
                for (std::int64_t m21 : {1, 2, 3})
                    for (std::int64_t m22 : {1, 3, -1}) {
                        CharacterIndex m1{m11, m12}, m2{m21, m22};
                        IdentityContribution c = identity_contribution(n, 1, m1, m2, triv);
                        if (!c.nonzero) {
                            CHECK_THROWS_AS(identity_contribution_oracle(n, 1, m1, m2, triv),
                                            ConditionsNotMet);
                            continue;
                        }
                        ++nonzero_cases;
                        CHECK(c.d_definitions_agree);
                        cplx oracle = identity_contribution_oracle(n, 1, m1, m2, triv);
                        CHECK(close(oracle, c.value, 1e-7 * (1.0 + std::abs(c.value))));
                    }
    CHECK(nonzero_cases > 20);
}

TEST_CASE("identity contribution: p^2 case and exchange symmetry") {
    DirichletChar triv = DirichletChar::trivial(1);
    for (std::int64_t p : {2, 3, 5}) {
        CharacterIndex m{p, 1};
        IdentityContribution c = identity_contribution(p * p, 1, m, m, triv);
        REQUIRE(c.nonzero);
        CHECK(c.s == p);
        cplx oracle = identity_contribution_oracle(p * p, 1, m, m, triv);
        CHECK(close(oracle, c.value, 1e-7 * (1.0 + std::abs(c.value))));
    }
    // S-level exchange symmetry of the remark:
    //   S(m11 n/gcd(t, n/s), m12 t, d, n) = S(m21 n/gcd(s, n/t), m22 n/t, d, n)
    for (std::int64_t n = 1; n <= 16; ++n)
        for (std::int64_t m11 : {1, 2})
            for (std::int64_t m12 : {1, 2, 4})
                for (std::int64_t m21 : {1, 2})
                    for (std::int64_t m22 : {1, 2}) {
                        CharacterIndex m1{m11, m12}, m2{m21, m22};
                        IdentityContribution c = identity_contribution(n, 1, m1, m2, triv);
                        if (!c.nonzero) continue;
                        std::int64_t t = std::abs(c.t), s = c.s;
                        REQUIRE(n % t == 0);
                        std::int64_t lhs = S_closed({m11 * (n / std::gcd(t, n / s)), m12 * t, c.d, n});
                        std::int64_t rhs = S_closed({m21 * (n / std::gcd(s, n / t)), m22 * (n / t), c.d, n});
                        CHECK(lhs == rhs);
                    }
}

TEST_CASE("identity contribution with nontrivial character") {
    // n coprime to N = 5; omega = Legendre symbol mod 5
    DirichletChar leg = DirichletChar::legendre(5);
    for (std::int64_t n : {4, 9, 16}) {
        for (std::int64_t m11 : {1, 2, 3}) {
            CharacterIndex m1{m11, 1}, m2{1, 1};
            IdentityContribution c = identity_contribution(n, 5, m1, m2, leg);
            if (!c.nonzero) continue;
            cplx oracle = identity_contribution_oracle(n, 5, m1, m2, leg);
            CHECK(close(oracle, c.value, 1e-7 * (1.0 + std::abs(c.value))));
        }
    }
}
