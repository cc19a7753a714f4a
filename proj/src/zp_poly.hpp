#pragma once

// Dense polynomial arithmetic over Z_p, parameterized by a coefficient ring. WordRing serves
// p < 2^32 with machine words; BigRing serves everything else with GMP integers.

#include "rootfield/error.hpp"
#include "rootfield/integer.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rootfield::detail {

struct WordRing {
    using T = std::uint64_t;
    std::uint64_t p;

    static bool accepts(const Int& prime) { return prime < (Int(1) << 32); }

    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(T a) const { return a == 0; }
    T add(T a, T b) const {
        const T s = a + b;
        return s >= p ? s - p : s;
    }
    T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
    T mul(T a, T b) const { return a * b % p; }
    T inv(T a) const {
        // Extended Euclid on signed 64-bit values; p < 2^32 keeps everything in range.
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
        while (new_r != 0) {
            const std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (r != 1)
            throw Error(ErrorCode::ZeroInverse, "scalar has no inverse");
        return static_cast<T>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
    }
    T from(const Int& value) const {
        Int reduced = value % Int(static_cast<unsigned long>(p));
        if (reduced < 0)
            reduced += static_cast<unsigned long>(p);
        return reduced.get_ui();
    }
    Int to_int(T a) const { return Int(static_cast<unsigned long>(a)); }
};

struct BigRing {
    using T = Int;
    Int p;

    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(const T& a) const { return a == 0; }
    T add(const T& a, const T& b) const {
        T s = a + b;
        if (s >= p)
            s -= p;
        return s;
    }
    T sub(const T& a, const T& b) const {
        T s = a - b;
        if (s < 0)
            s += p;
        return s;
    }
    T neg(const T& a) const { return a == 0 ? T(0) : T(p - a); }
    T mul(const T& a, const T& b) const {
        T out = a * b;
        mpz_mod(out.get_mpz_t(), out.get_mpz_t(), p.get_mpz_t());
        return out;
    }
    T inv(const T& a) const {
        T out;
        if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
            throw Error(ErrorCode::ZeroInverse, "scalar has no inverse");
        return out;
    }
    T from(const Int& value) const {
        T out;
        mpz_mod(out.get_mpz_t(), value.get_mpz_t(), p.get_mpz_t());
        return out;
    }
    Int to_int(const T& a) const { return a; }
};

template <class R>
using Poly = std::vector<typename R::T>;

template <class R>
void trim(const R& ring, Poly<R>& a) {
    while (!a.empty() && ring.is_zero(a.back()))
        a.pop_back();
}

template <class R>
Poly<R> poly_mul(const R& ring, const Poly<R>& a, const Poly<R>& b) {
    if (a.empty() || b.empty())
        return {};
    Poly<R> out(a.size() + b.size() - 1, ring.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ring.is_zero(a[i]))
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
    }
    trim(ring, out);
    return out;
}

template <class R>
Poly<R> poly_sub(const R& ring, Poly<R> a, const Poly<R>& b) {
    if (a.size() < b.size())
        a.resize(b.size(), ring.zero());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = ring.sub(a[i], b[i]);
    trim(ring, a);
    return a;
}

/// Quotient and remainder of a by a nonzero trimmed divisor.
template <class R>
std::pair<Poly<R>, Poly<R>> poly_divmod(const R& ring, Poly<R> a, const Poly<R>& divisor) {
    trim(ring, a);
    const auto lead_inv = ring.inv(divisor.back());
    const std::size_t dd = divisor.size() - 1;
    Poly<R> quot;
    if (a.size() >= divisor.size())
        quot.assign(a.size() - dd, ring.zero());
    while (a.size() >= divisor.size()) {
        const auto c = ring.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - divisor.size();
        quot[shift] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            a[shift + j] = ring.sub(a[shift + j], ring.mul(c, divisor[j]));
        trim(ring, a);
    }
    trim(ring, quot);
    return {std::move(quot), std::move(a)};
}

/// Monic gcd; gcd(0, 0) is the empty polynomial.
template <class R>
Poly<R> poly_gcd(const R& ring, Poly<R> a, Poly<R> b) {
    trim(ring, a);
    trim(ring, b);
    while (!b.empty()) {
        auto rem = poly_divmod(ring, std::move(a), b).second;
        a = std::move(b);
        b = std::move(rem);
    }
    if (!a.empty()) {
        const auto lead_inv = ring.inv(a.back());
        for (auto& c : a)
            c = ring.mul(c, lead_inv);
    }
    return a;
}

/// Inverse of a modulo f, padded to deg f coefficients; nullopt when gcd(a, f) != 1.
template <class R>
std::optional<Poly<R>> poly_inv_mod(const R& ring, const Poly<R>& a, const Poly<R>& f) {
    Poly<R> r0 = f, r1 = a;
    trim(ring, r1);
    Poly<R> s0, s1{ring.one()};
    while (!r1.empty()) {
        auto [quot, rem] = poly_divmod(ring, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        auto next = poly_sub(ring, s0, poly_mul(ring, quot, s1));
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    if (r0.size() != 1)
        return std::nullopt;
    const auto scale = ring.inv(r0[0]);
    for (auto& c : s0)
        c = ring.mul(c, scale);
    s0 = poly_divmod(ring, std::move(s0), f).second;
    s0.resize(f.size() - 1, ring.zero());
    return s0;
}

/// Product of two dense residues (deg < m) reduced by the monic f of degree m.
template <class R>
Poly<R> mulmod(const R& ring, const Poly<R>& a, const Poly<R>& b, const Poly<R>& f) {
    const std::size_t m = f.size() - 1;
    Poly<R> t(2 * m - 1, ring.zero());
    for (std::size_t i = 0; i < m; ++i) {
        if (ring.is_zero(a[i]))
            continue;
        for (std::size_t j = 0; j < m; ++j)
            t[i + j] = ring.add(t[i + j], ring.mul(a[i], b[j]));
    }
    for (std::size_t i = 2 * m - 1; i-- > m;) {
        const auto c = t[i];
        if (ring.is_zero(c))
            continue;
        for (std::size_t j = 0; j < m; ++j)
            t[i - m + j] = ring.sub(t[i - m + j], ring.mul(c, f[j]));
    }
    t.resize(m);
    return t;
}

inline Poly<WordRing> mulmod(const WordRing& ring, const Poly<WordRing>& a,
                             const Poly<WordRing>& b, const Poly<WordRing>& f) {
    using u128 = unsigned __int128;
    const std::size_t m = f.size() - 1;
    const std::uint64_t p = ring.p;
    std::vector<u128> acc(2 * m - 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t ai = a[i];
        if (ai == 0)
            continue;
        for (std::size_t j = 0; j < m; ++j)
            acc[i + j] += static_cast<u128>(ai * b[j]);
    }
    std::vector<std::uint64_t> t(2 * m - 1);
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = static_cast<std::uint64_t>(acc[i] % p);
    for (std::size_t i = 2 * m - 1; i-- > m;) {
        const std::uint64_t neg_c = t[i] == 0 ? 0 : p - t[i];
        if (neg_c == 0)
            continue;
        for (std::size_t j = 0; j < m; ++j)
            t[i - m + j] = (t[i - m + j] + neg_c * f[j]) % p;
    }
    t.resize(m);
    return t;
}

inline Poly<BigRing> mulmod(const BigRing& ring, const Poly<BigRing>& a, const Poly<BigRing>& b,
                            const Poly<BigRing>& f) {
    const std::size_t m = f.size() - 1;
    std::vector<Int> t(2 * m - 1, Int(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < m; ++j)
            mpz_addmul(t[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    for (std::size_t i = 2 * m - 1; i-- > m;) {
        mpz_mod(t[i].get_mpz_t(), t[i].get_mpz_t(), ring.p.get_mpz_t());
        if (t[i] == 0)
            continue;
        for (std::size_t j = 0; j < m; ++j)
            mpz_submul(t[i - m + j].get_mpz_t(), t[i].get_mpz_t(), f[j].get_mpz_t());
    }
    t.resize(m);
    for (auto& c : t)
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), ring.p.get_mpz_t());
    return t;
}

/// out_i = sum_j a_j * cols[j][i]
template <class R>
Poly<R> apply_columns(const R& ring, const std::vector<Poly<R>>& cols, const Poly<R>& a) {
    const std::size_t m = a.size();
    Poly<R> out(m, ring.zero());
    for (std::size_t j = 0; j < m; ++j) {
        if (ring.is_zero(a[j]))
            continue;
        for (std::size_t i = 0; i < m; ++i)
            out[i] = ring.add(out[i], ring.mul(a[j], cols[j][i]));
    }
    return out;
}

inline Poly<WordRing> apply_columns(const WordRing& ring, const std::vector<Poly<WordRing>>& cols,
                                    const Poly<WordRing>& a) {
    using u128 = unsigned __int128;
    const std::size_t m = a.size();
    std::vector<u128> acc(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        const std::uint64_t aj = a[j];
        if (aj == 0)
            continue;
        const auto& col = cols[j];
        for (std::size_t i = 0; i < m; ++i)
            acc[i] += static_cast<u128>(aj * col[i]);
    }
    Poly<WordRing> out(m);
    for (std::size_t i = 0; i < m; ++i)
        out[i] = static_cast<std::uint64_t>(acc[i] % ring.p);
    return out;
}

/// Dense residue of x reduced mod f (for deg f = 1 this is the root -f_0).
template <class R>
Poly<R> x_residue(const R& ring, const Poly<R>& f) {
    const std::size_t m = f.size() - 1;
    Poly<R> x(m, ring.zero());
    if (m == 1)
        x[0] = ring.neg(f[0]);
    else
        x[1] = ring.one();
    return x;
}

template <class R>
Poly<R> powmod(const R& ring, const Poly<R>& a, const Int& e, const Poly<R>& f) {
    const std::size_t m = f.size() - 1;
    Poly<R> acc(m, ring.zero());
    acc[0] = ring.one();
    if (e == 0)
        return acc;
    acc = a;
    for (std::size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2) - 1; bit-- > 0;) {
        acc = mulmod(ring, acc, acc, f);
        if (mpz_tstbit(e.get_mpz_t(), bit))
            acc = mulmod(ring, acc, a, f);
    }
    return acc;
}

/// Columns x^{j p} mod f, j in [0, m).
template <class R>
std::vector<Poly<R>> frobenius_columns(const R& ring, const Poly<R>& f) {
    const std::size_t m = f.size() - 1;
    std::vector<Poly<R>> cols(m);
    cols[0].assign(m, ring.zero());
    cols[0][0] = ring.one();
    if (m == 1)
        return cols;
    const Poly<R> xp = powmod(ring, x_residue(ring, f), ring.p, f);
    for (std::size_t j = 1; j < m; ++j)
        cols[j] = mulmod(ring, cols[j - 1], xp, f);
    return cols;
}

/// Rabin: f of degree m is irreducible iff x^{p^m} = x mod f and gcd(x^{p^{m/l}} - x, f) = 1
/// for each prime l | m.
template <class R>
bool rabin_irreducible(const R& ring, const Poly<R>& f, const std::vector<Poly<R>>& cols) {
    const std::size_t m = f.size() - 1;
    if (m == 1)
        return true;
    const auto primes = prime_divisors(m);
    const Poly<R> x = x_residue(ring, f);
    Poly<R> h = x;
    std::vector<Poly<R>> checkpoints(m + 1);
    for (std::size_t i = 1; i <= m; ++i) {
        h = apply_columns(ring, cols, h);
        checkpoints[i] = h;
    }
    if (checkpoints[m] != x)
        return false;
    for (const std::uint64_t l : primes) {
        const auto diff = poly_sub(ring, checkpoints[m / l], x);
        if (poly_gcd(ring, diff, f).size() != 1)
            return false;
    }
    return true;
}

}  // namespace rootfield::detail
