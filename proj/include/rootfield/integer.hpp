#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rootfield {

using Int = mpz_class;

/// Probabilistic primality with error below 2^-80; exact below 2^64.
bool is_prime(const Int& n);
bool is_prime(std::uint64_t n);

Int pow(const Int& base, std::uint64_t exp);

/// floor(log2 n) for n >= 1.
std::uint64_t floor_log2(const Int& n);
/// ceil(log2 n) for n >= 1; ceil_log2(1) == 0.
std::uint64_t ceil_log2(const Int& n);
std::uint64_t ceil_log2(std::uint64_t n);

/// Non-negative modular inverse; throws InvalidArgument if none exists.
Int mod_inverse(const Int& a, const Int& modulus);

/// Largest e with r^e | n, and n / r^e.
std::pair<std::uint64_t, Int> split_power(const Int& n, const Int& r);

/// Prime factorization of n >= 2 by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factor_trial(std::uint64_t n);

/// Distinct primes of a small integer, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t to_u64(const Int& n);
bool fits_u64(const Int& n);

/// Strict decimal parse (optional leading '-'); throws ParseError.
Int parse_int(std::string_view text);
std::uint64_t parse_u64(std::string_view text);

inline std::string to_string(const Int& n) { return n.get_str(10); }

}  // namespace rootfield
