#pragma once

#include "rootfield/integer.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace rootfield {

/// Least k >= 1 with base^k = 1 (mod r), by linear iteration. Throws NotCoprime.
std::uint64_t mult_order(const Int& base, std::uint64_t r);

/// How r meets the group order N = p^m - 1.
enum class GcdTag {
    Coprime,        // gcd(r, N) = 1
    RamifiedExact,  // r | N and gcd(N / r, r) = 1; for prime r this is r || N
    HigherPower,    // r | N and gcd(N / r, r) > 1; for prime r this is r^2 | N
    Partial,        // gcd(r, N) > 1 but r does not divide N (composite r only)
};

std::string_view tag_name(GcdTag tag) noexcept;

struct CaseAnalysis {
    std::uint64_t r = 0;
    GcdTag tag = GcdTag::Coprime;
    /// Order of p modulo r.
    std::uint64_t k = 0;
    /// u in [1, r) for the coprime and ramified cases: u N = -1 resp. u N / r = -1 (mod r).
    std::optional<std::uint64_t> u;
    /// Largest alpha with r^alpha | N.
    std::uint64_t alpha = 0;
};

/// Throws RDividesP when gcd(r, p) != 1 and RTooSmall for r < 2.
CaseAnalysis analyze_case(const Int& p, std::uint64_t m, std::uint64_t r);

enum class ExponentCase { Coprime, Ramified };

std::string_view case_name(ExponentCase c) noexcept;

/// v = a + b * sum_{j<n} base^{j * period} with r v = 1 (mod congruence_modulus).
/// base = p^base_degree; the p-adic step per period is period * base_degree.
struct PeriodicExponent {
    Int a;
    Int b;
    std::uint64_t period = 0;
    std::uint64_t n = 0;
    Int v;
    Int congruence_modulus;
    ExponentCase case_tag = ExponentCase::Coprime;
    Int base;
    std::uint64_t base_degree = 1;
    /// The integrality witness z; b = base^{m - n period} z.
    Int z;
    std::uint64_t r = 0;
    std::uint64_t u = 0;
    std::uint64_t k = 0;

    /// G = (base^{n period} - 1) / (base^period - 1).
    Int geometric_sum() const;
};

/// Checks reconstruction, bounds, the congruence and n >= 1; returns the first failure or
/// nullopt. Recomputes each quantity from scratch.
std::optional<std::string> check_invariants(const PeriodicExponent& pe);

/// Base-p decomposition with period k (gcd(r, p^m - 1) = 1). The m > k check runs first:
/// PeriodTooLong, then NotCoprimeCase.
PeriodicExponent decompose_coprime(const Int& p, std::uint64_t m, std::uint64_t r);

/// Base-p decomposition with period k r (r || p^m - 1). The case check runs first:
/// NotRamifiedCase, then PeriodTooLong.
PeriodicExponent decompose_ramified(const Int& p, std::uint64_t m, std::uint64_t r);

enum class BaseQVariant {
    Coprime,   // gcd(q(q - 1), r) = 1, k = ord_r(q) > 1, gcd(m, k) = 1
    Ramified,  // r | q - 1, gcd((q - 1) / r, r) = 1, gcd(m, r) = 1
};

struct BaseQDecomposition {
    PeriodicExponent exponent;  // base q, degree m over F_q
    BaseQVariant variant = BaseQVariant::Coprime;
    Int p;
    std::uint64_t d = 1;        // q = p^d
    std::uint64_t k_q = 0;      // order of q modulo r
    std::uint64_t n = 0;        // periodic length in base q
    std::uint64_t k_prime = 0;  // order of p modulo r
    std::uint64_t n_prime = 0;  // periodic length in base p over F_{p^{md}}
};

/// Base-q decomposition for q = p^d, used to compare n against the base-p length n'.
/// Throws ConditionsUnmet when neither variant's conditions hold, PeriodTooLong when n = 0.
BaseQDecomposition decompose_base_q(const Int& q, std::uint64_t m, std::uint64_t r);

/// q = p^d with p prime, or nullopt.
std::optional<std::pair<Int, std::uint64_t>> prime_power_root(const Int& q);

}  // namespace rootfield
