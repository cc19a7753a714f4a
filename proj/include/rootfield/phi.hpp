#pragma once

#include "rootfield/field.hpp"
#include "rootfield/periodic.hpp"

#include <cstdint>
#include <vector>

namespace rootfield {

/// Doubling chain for y -> y^{B_N}, B_N = 1 + s + ... + s^{N-1}, s = p^step.
struct PhiPlan {
    enum class Move { Double, DoublePlusOne };

    std::uint64_t term_count = 1;
    std::uint64_t step = 1;
    /// Moves after the leading bit of term_count, most significant first.
    std::vector<Move> chain;

    static PhiPlan make(std::uint64_t term_count, std::uint64_t step);

    /// Term count reached by replaying the chain from 1.
    std::uint64_t replay() const;
    std::uint64_t multiplication_count() const;
};

/// y^{1 + s + s^2 + ... + s^n} with s = p^step, via
///   y^{B_{2t}}   = y^{B_t} * Frob^{t step}(y^{B_t})
///   y^{B_{2t+1}} = y^{B_{2t}} * Frob^{2t step}(y)
/// At most 2 ceil(log2(n + 1)) multiplications, no inversions.
Elem phi_map(const FieldCtx& ctx, const Elem& y, std::uint64_t step, std::uint64_t n, OpCounter& counter);

/// delta^{pe.v} as delta^a * phi(delta^b) with n - 1 geometric steps of period * base_degree.
Elem apply_periodic(const FieldCtx& ctx, const Elem& delta, const PeriodicExponent& pe, OpCounter& counter);

/// Reference path for the same exponent: one square-and-multiply over the full v.
Elem apply_naive(const FieldCtx& ctx, const Elem& delta, const PeriodicExponent& pe, OpCounter& counter);

}  // namespace rootfield
