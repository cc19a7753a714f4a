// Test-side oracles. Nothing here calls into FieldCtx arithmetic, so results can be compared
// against the library without sharing code paths.
#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace support {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // little-endian coefficients over Z_p

inline u64 powmod(u64 base, u64 e, u64 mod) {
    unsigned __int128 acc = 1 % mod, b = base % mod;
    while (e > 0) {
        if (e & 1U)
            acc = acc * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return static_cast<u64>(acc);
}

inline bool is_prime_small(u64 n) {
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline u64 ipow(u64 b, u64 e) {
    u64 out = 1;
    while (e-- > 0)
        out *= b;
    return out;
}

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline Poly rem(Poly a, const Poly& f, u64 p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const u64 lead_inv = powmod(f.back(), p - 2, p);
    while (a.size() > df) {
        const u64 c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i)
            a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
        trim(a);
    }
    return a;
}

/// Schoolbook product reduced by a monic f; result padded to deg f coefficients.
inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    Poly out = rem(prod, f, p);
    out.resize(f.size() - 1, 0);
    return out;
}

inline Poly powpoly(const Poly& a, u64 e, const Poly& f, u64 p) {
    Poly acc(f.size() - 1, 0);
    acc[0] = 1;
    Poly base = a;
    while (e > 0) {
        if (e & 1U)
            acc = mulmod(acc, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

/// Exhaustive irreducibility check: no monic factor of degree 1..deg/2 divides f.
inline bool irreducible_by_search(const Poly& f, u64 p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const u64 count = ipow(p, d);
        for (u64 idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            u64 t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            g[d] = 1;
            if (rem(f, g, p).empty())
                return false;
        }
    }
    return true;
}

/// Smallest monic irreducible of degree m whose lower coefficients, read as a base-p number
/// with c0 least significant, are minimal; c0 = 0 is skipped for m >= 2.
inline Poly first_irreducible(u64 p, std::size_t m) {
    const u64 count = ipow(p, m);
    for (u64 idx = 0; idx < count; ++idx) {
        Poly f(m + 1, 0);
        u64 t = idx;
        for (std::size_t i = 0; i < m; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[m] = 1;
        if (m >= 2 && f[0] == 0)
            continue;
        if (irreducible_by_search(f, p))
            return f;
    }
    return {};
}

/// Multiplicative order of b modulo r by direct iteration.
inline u64 order_mod(u64 b, u64 r) {
    u64 x = b % r, k = 1;
    while (x != 1 % r) {
        x = x * (b % r) % r;
        ++k;
    }
    return k;
}

/// Seeded draw used by the property generators.
inline u64 draw(std::mt19937_64& rng, u64 lo, u64 hi) {
    return std::uniform_int_distribution<u64>(lo, hi)(rng);
}

inline std::vector<u64> primes_upto(u64 n) {
    std::vector<u64> out;
    for (u64 i = 2; i <= n; ++i)
        if (is_prime_small(i))
            out.push_back(i);
    return out;
}

}  // namespace support
