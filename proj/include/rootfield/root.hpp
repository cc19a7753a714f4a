#pragma once

#include "rootfield/field.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace rootfield {

enum class RootStatus { RootFound, NonResidue };

enum class PathTag { CoprimeFast, RamifiedFast, Amm, CompositeChain, NaiveFallback };

/// Caller override for which algorithm serves each prime stage.
///   Auto     - periodic fast path when the decomposition exists, AMM when r^2 | p^m - 1
///   Periodic - like Auto, but PeriodTooLong / UnsupportedPath instead of any fallback
///   Naive    - full-width exponent for coprime and ramified stages; AMM when r^2 | p^m - 1
///   Amm      - AMM for every prime dividing p^m - 1; coprime stages use the full exponent
enum class PathPolicy { Auto, Periodic, Naive, Amm };

std::string_view status_name(RootStatus s) noexcept;
std::string_view path_name(PathTag p) noexcept;
std::optional<PathPolicy> parse_policy(std::string_view text) noexcept;

struct RootOutcome {
    RootStatus status = RootStatus::NonResidue;
    std::optional<Elem> root;
    /// root^r = delta was checked (always true for root_found outcomes).
    bool verified = false;
    OpCounter counters;
    PathTag path = PathTag::NaiveFallback;
    /// For non_residue: the prime l with (stage input)^{(p^m - 1) / l} != 1.
    std::optional<std::uint64_t> certifying_prime;

    bool found() const noexcept { return status == RootStatus::RootFound; }
};

/// delta^{(p^m - 1) / r} == 1. Requires r | p^m - 1 and delta != 0.
bool is_rth_residue(const FieldCtx& ctx, const Elem& delta, std::uint64_t r, OpCounter& counter);
bool is_rth_residue(const FieldCtx& ctx, const Elem& delta, std::uint64_t r);

/// Seeded sampling (128 tries), then canonical enumeration. Requires r | p^m - 1.
Elem find_nonresidue(const FieldCtx& ctx, std::uint64_t r, std::uint64_t seed, OpCounter& counter);
Elem find_nonresidue(const FieldCtx& ctx, std::uint64_t r, std::uint64_t seed);

/// Precomputation for AMM with group order r^t s, gcd(r, s) = 1. Immutable once built.
struct AmmContext {
    std::uint64_t r = 0;
    std::uint64_t t = 0;
    Int s;
    /// Least alpha >= 0 with s | r alpha - 1.
    Int alpha;
    Elem rho;
    /// rho^s, of order exactly r^t.
    Elem c;
    /// K_i = c^{i r^{t-1}}, i in [0, r).
    std::vector<Elem> k_powers;
    std::map<Elem, std::uint64_t> k_index;
    OpCounter setup_cost;

    static AmmContext make(const FieldCtx& ctx, std::uint64_t r, const Elem& rho);
    static AmmContext make(const FieldCtx& ctx, std::uint64_t r, std::uint64_t seed);
};

/// Adleman-Manders-Miller for prime r | p^m - 1. The residue test runs first. When
/// `stage_trace` is given it receives the accumulator after each digit stage.
RootOutcome amm_root(const FieldCtx& ctx, const Elem& delta, const AmmContext& amm,
                     std::vector<Elem>* stage_trace = nullptr);
/// Builds the context from the seed; its cost is included in the counters.
RootOutcome amm_root(const FieldCtx& ctx, const Elem& delta, std::uint64_t r, std::uint64_t seed);

/// gcd(r, p^m - 1) = 1: the periodic exponent when m > k, else delta^{r^{-1} mod p^m - 1}.
RootOutcome root_coprime(const FieldCtx& ctx, const Elem& delta, std::uint64_t r,
                         PathPolicy policy = PathPolicy::Auto);

/// r || p^m - 1: candidate delta^v with r v = 1 mod (p^m - 1) / r, then the rho^r = delta check.
RootOutcome root_ramified(const FieldCtx& ctx, const Elem& delta, std::uint64_t r,
                          PathPolicy policy = PathPolicy::Auto);

/// Any r >= 2. Factors r, handles p | r by inverse Frobenius and extracts prime roots in
/// increasing prime order. The final root^r = delta check always runs.
RootOutcome rth_root(const FieldCtx& ctx, const Elem& delta, std::uint64_t r, std::uint64_t seed = 0,
                     PathPolicy policy = PathPolicy::Auto);

}  // namespace rootfield
