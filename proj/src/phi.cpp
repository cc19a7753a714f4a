#include "rootfield/phi.hpp"

#include "rootfield/error.hpp"

namespace rootfield {

PhiPlan PhiPlan::make(std::uint64_t term_count, std::uint64_t step) {
    if (term_count < 1 || step < 1)
        throw Error(ErrorCode::InvalidArgument, "phi plan needs term_count >= 1 and step >= 1");
    PhiPlan plan;
    plan.term_count = term_count;
    plan.step = step;
    int top = 63;
    while (((term_count >> top) & 1U) == 0)
        --top;
    for (int bit = top - 1; bit >= 0; --bit)
        plan.chain.push_back(((term_count >> bit) & 1U) != 0 ? Move::DoublePlusOne : Move::Double);
    return plan;
}

std::uint64_t PhiPlan::replay() const {
    std::uint64_t t = 1;
    for (const Move move : chain)
        t = move == Move::Double ? 2 * t : 2 * t + 1;
    return t;
}

std::uint64_t PhiPlan::multiplication_count() const {
    std::uint64_t count = 0;
    for (const Move move : chain)
        count += move == Move::Double ? 1 : 2;
    return count;
}

Elem phi_map(const FieldCtx& ctx, const Elem& y, std::uint64_t step, std::uint64_t n, OpCounter& counter) {
    const PhiPlan plan = PhiPlan::make(n + 1, step);
    const std::uint64_t m = ctx.m();
    // Exponents of Frobenius are only needed mod m.
    const std::uint64_t step_mod = step % m;
    Elem acc = y;
    std::uint64_t t = 1;
    for (const PhiPlan::Move move : plan.chain) {
        const std::uint64_t shift = static_cast<std::uint64_t>((static_cast<unsigned __int128>(t % m) * step_mod) % m);
        acc = ctx.mul(acc, ctx.frobenius(acc, shift, counter), counter);
        t *= 2;
        if (move == PhiPlan::Move::DoublePlusOne) {
            const std::uint64_t shift_y =
                static_cast<std::uint64_t>((static_cast<unsigned __int128>(t % m) * step_mod) % m);
            acc = ctx.mul(acc, ctx.frobenius(y, shift_y, counter), counter);
            t += 1;
        }
    }
    return acc;
}

Elem apply_periodic(const FieldCtx& ctx, const Elem& delta, const PeriodicExponent& pe, OpCounter& counter) {
    if (pe.n < 1)
        throw Error(ErrorCode::InvalidArgument, "periodic exponent needs n >= 1");
    if (pe.b == 0)
        return ctx.pow(delta, pe.a, counter);
    const Elem head = ctx.pow(delta, pe.a, counter);
    const Elem tail = phi_map(ctx, ctx.pow(delta, pe.b, counter), pe.period * pe.base_degree, pe.n - 1, counter);
    if (pe.a == 0)
        return tail;
    return ctx.mul(head, tail, counter);
}

Elem apply_naive(const FieldCtx& ctx, const Elem& delta, const PeriodicExponent& pe, OpCounter& counter) {
    return ctx.pow(delta, pe.v, counter);
}

}  // namespace rootfield
