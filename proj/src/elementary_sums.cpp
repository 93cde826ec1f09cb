#include "gsp4/elementary_sums.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace gsp4 {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool g_debug_flip = false;

std::int64_t pow_i64(std::int64_t base, std::int64_t exp) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r *= base;
    return r;
}

std::vector<std::pair<std::int64_t, std::int64_t>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, std::int64_t>> f;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        std::int64_t e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

// v_p capped at cap, with v_p(0) := cap
std::int64_t valuation_capped(std::int64_t a, std::int64_t p, std::int64_t cap) {
    if (a == 0) return cap;
    std::int64_t v = 0;
    while (v < cap && a % p == 0) { a /= p; ++v; }
    return v;
}

void check_spec(const ElementarySumSpec& s) {
    if (s.N < 1 || s.d < 1 || s.N % s.d != 0)
        throw InvalidSpec("elementary sum: need d >= 1, N >= 1, d | N");
}

} // namespace

void set_sum_debug_flip(bool enabled) { g_debug_flip = enabled; }

cplx S_bruteforce(const ElementarySumSpec& spec) {
    check_spec(spec);
    const std::int64_t N = spec.N, d = spec.d;
    std::vector<cplx> root(static_cast<size_t>(N));
    for (std::int64_t k = 0; k < N; ++k)
        root[static_cast<size_t>(k)] = std::polar(1.0, kTwoPi * double(k) / double(N));
    std::int64_t a = ((spec.a % N) + N) % N, b = ((spec.b % N) + N) % N;
    cplx acc = 0.0;
    for (std::int64_t x = 0; x < N; ++x) {
        std::int64_t ax = (a * x) % N;
        for (std::int64_t y = 0; y < N; ++y) {
            if ((x * y) % d) continue;
            acc += root[static_cast<size_t>((ax + b * y) % N)];
        }
    }
    return acc;
}

std::int64_t S_primepower(std::int64_t i, std::int64_t j, std::int64_t k,
                          std::int64_t n, std::int64_t p) {
    if (k > n || k < 0 || n < 0 || i < 0 || j < 0 || p < 2)
        throw InvalidSpec("S_primepower: need 0 <= k <= n, i,j >= 0, p prime");
    std::int64_t count = k + 1 - std::max<std::int64_t>(0, n - i) - std::max<std::int64_t>(0, n - j);
    if (count < 0) count = 0;
    std::int64_t e1 = (i >= n && j >= n) ? 1 : 0;
    std::int64_t e2 = (i < n && j < n && i + j >= 2 * n - k - 1) ? 1 : 0;
    if (g_debug_flip) e2 = -e2;
    // p^{2n-k}(1-1/p) count + p^{2n-k-1}(e1 - e2)
    //   = p^{2n-k} count + p^{2n-k-1}(e1 - e2 - count)
    std::int64_t tail = e1 - e2 - count;
    if (2 * n - k - 1 < 0) {
        // only n = k = 0; the fractional-power coefficient must vanish
        if (tail != 0) throw std::logic_error("S_primepower: inconsistent n = 0 case");
        return count;
    }
    return pow_i64(p, 2 * n - k) * count + pow_i64(p, 2 * n - k - 1) * tail;
}

std::int64_t S_closed(const ElementarySumSpec& spec) {
    check_spec(spec);
    std::int64_t r = 1;
    for (auto [p, n] : factorize(spec.N)) {
        std::int64_t i = valuation_capped(spec.a, p, n);
        std::int64_t j = valuation_capped(spec.b, p, n);
        std::int64_t k = valuation_capped(spec.d, p, n);
        r *= S_primepower(i, j, k, n, p);
        if (r == 0) return 0;
    }
    return r;
}

namespace {

struct IdentityConditions {
    bool ok = false;
    std::int64_t s = 0, t = 0, D = 0, Dd1 = 0, d = 0;
    Rat d1;
};

IdentityConditions identity_conditions(std::int64_t n, const CharacterIndex& m1,
                                       const CharacterIndex& m2) {
    IdentityConditions c;
    Rat d1 = Rat(m1.m1) / Rat(m2.m1);
    Rat d2 = Rat(std::int64_t(m1.m1) * m1.m2) / Rat(std::int64_t(m2.m1) * m2.m2);
    Rat q = abs(d1 * d2);
    Rat s2 = Rat(n) / q; // want s^2 = n / |d1 d2| with s a positive integer
    if (rat_den(s2) != 1) return c;
    Int s2i = rat_num(s2);
    Int sr = sqrt(s2i);
    if (sr * sr != s2i) return c;
    std::int64_t s = static_cast<std::int64_t>(sr);
    if (s == 0 || n % s != 0) return c;
    Rat tr = Rat(s) * d1;
    if (rat_den(tr) != 1) return c;
    std::int64_t t = static_cast<std::int64_t>(rat_num(tr));
    if (t == 0 || n % std::abs(t) != 0) return c;

    c.ok = true;
    c.s = s;
    c.t = t;
    c.d1 = d1;
    c.D = std::gcd(std::abs(t), n / s);
    Rat dd1 = Rat(c.D) / d1;
    if (rat_den(dd1) != 1)
        throw std::logic_error("identity_contribution: D/d1 not integral");
    c.Dd1 = std::abs(static_cast<std::int64_t>(rat_num(dd1)));
    c.d = std::gcd(c.D, c.Dd1);
    return c;
}

} // namespace

IdentityContribution identity_contribution(std::int64_t n, std::int64_t N,
                                           const CharacterIndex& m1,
                                           const CharacterIndex& m2,
                                           const DirichletChar& omega) {
    if (n < 1 || N < 1 || std::gcd(n, N) != 1)
        throw InvalidSpec("identity_contribution: need positive coprime n, N");
    if (omega.modulus() != N)
        throw InvalidSpec("identity_contribution: omega modulus mismatch");

    IdentityContribution out;
    IdentityConditions c = identity_conditions(n, m1, m2);
    if (!c.ok) return out;

    out.nonzero = true;
    out.s = c.s;
    out.t = c.t;
    out.D = c.D;
    out.d = c.d;
    // audit of the alternative definition d = gcd(s, n/s, t, n/t)
    std::int64_t alt = std::gcd(std::gcd(c.s, n / c.s),
                                std::gcd(std::abs(c.t), n / std::abs(c.t)));
    out.d_definitions_agree = (alt == c.d);

    out.sum_term = S_closed({m1.m1 * (n / c.D), m1.m2 * c.t, c.d, n});
    // n d / |s^3 d1| = n d / (s^2 |t|)
    double scale = double(n) * double(c.d) / (double(c.s) * double(c.s) * double(std::abs(c.t)));
    out.value = omega.bar(c.s) * scale * double(out.sum_term);
    return out;
}

cplx identity_contribution_oracle(std::int64_t n, std::int64_t N,
                                  const CharacterIndex& m1,
                                  const CharacterIndex& m2,
                                  const DirichletChar& omega) {
    if (n < 1 || N < 1 || std::gcd(n, N) != 1 || omega.modulus() != N)
        throw InvalidSpec("identity_contribution_oracle: bad n, N, omega");
    IdentityConditions c = identity_conditions(n, m1, m2);
    if (!c.ok) throw ConditionsNotMet("identity_contribution_oracle: no admissible s");

    const std::int64_t sD = c.s * c.D;
    std::vector<cplx> root(static_cast<size_t>(n));
    for (std::int64_t k = 0; k < n; ++k)
        root[static_cast<size_t>(k)] = std::polar(1.0, kTwoPi * double(k) / double(n));
    auto idx = [&](std::int64_t v) { return static_cast<size_t>(((v % n) + n) % n); };

    // triple sum over a mod D/d1 and x,y mod sD with xy = D a (mod D/d1)
    cplx acc = 0.0;
    for (std::int64_t a = 0; a < c.Dd1; ++a) {
        std::int64_t target = ((c.D % c.Dd1) * (a % c.Dd1)) % c.Dd1;
        for (std::int64_t x = 0; x < sD; ++x) {
            std::int64_t ex = m1.m1 * x * (n / c.D);
            for (std::int64_t y = 0; y < sD; ++y) {
                if (((x * y - target) % c.Dd1 + c.Dd1) % c.Dd1) continue;
                acc += root[idx(ex + m1.m2 * c.t * y)];
            }
        }
    }
    // n^3 / |s^5 D^2 d1| = n^3 / (s^4 D^2 |t|)
    double scale = std::pow(double(n), 3) /
                   (std::pow(double(c.s), 4) * double(c.D) * double(c.D) * double(std::abs(c.t)));
    return omega.bar(c.s) * scale * acc;
}

} // namespace gsp4
