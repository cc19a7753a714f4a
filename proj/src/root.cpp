#include "rootfield/root.hpp"

#include "rootfield/error.hpp"
#include "rootfield/periodic.hpp"
#include "rootfield/phi.hpp"

#include <cassert>
#include <numeric>
#include <random>
#include <stdexcept>

namespace rootfield {

std::string_view status_name(RootStatus s) noexcept {
    return s == RootStatus::RootFound ? "root_found" : "non_residue";
}

std::string_view path_name(PathTag p) noexcept {
    switch (p) {
    case PathTag::CoprimeFast: return "coprime_fast";
    case PathTag::RamifiedFast: return "ramified_fast";
    case PathTag::Amm: return "amm";
    case PathTag::CompositeChain: return "composite_chain";
    case PathTag::NaiveFallback: return "naive_fallback";
    }
    return "unknown";
}

std::optional<PathPolicy> parse_policy(std::string_view text) noexcept {
    if (text == "auto")
        return PathPolicy::Auto;
    if (text == "periodic")
        return PathPolicy::Periodic;
    if (text == "naive")
        return PathPolicy::Naive;
    if (text == "amm")
        return PathPolicy::Amm;
    return std::nullopt;
}

namespace {

Int big(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

bool divides_order(const FieldCtx& ctx, std::uint64_t r) {
    return mpz_divisible_ui_p(ctx.order_minus_one().get_mpz_t(), r) != 0;
}

void require_divides(const FieldCtx& ctx, std::uint64_t r) {
    if (r < 2 || !divides_order(ctx, r))
        throw Error(ErrorCode::RNotDividingOrder,
                    std::to_string(r) + " does not divide p^m - 1 = " + to_string(ctx.order_minus_one()));
}

RootOutcome found(Elem root, PathTag path, const OpCounter& counters) {
    RootOutcome out;
    out.status = RootStatus::RootFound;
    out.root = std::move(root);
    out.verified = true;
    out.path = path;
    out.counters = counters;
    return out;
}

RootOutcome rejected(PathTag path, std::uint64_t prime, const OpCounter& counters) {
    RootOutcome out;
    out.status = RootStatus::NonResidue;
    out.verified = true;
    out.path = path;
    out.certifying_prime = prime;
    out.counters = counters;
    return out;
}

// Verifies candidate^r == delta with the cost charged to `counter`.
bool check_root(const FieldCtx& ctx, const Elem& candidate, std::uint64_t r, const Elem& delta, OpCounter& counter) {
    return ctx.pow(candidate, big(r), counter) == delta;
}

}  // namespace

bool is_rth_residue(const FieldCtx& ctx, const Elem& delta, std::uint64_t r, OpCounter& counter) {
    require_divides(ctx, r);
    if (ctx.is_zero(delta))
        throw Error(ErrorCode::ZeroElement, "residue test is undefined for zero");
    return ctx.is_one(ctx.pow(delta, ctx.order_minus_one() / big(r), counter));
}

bool is_rth_residue(const FieldCtx& ctx, const Elem& delta, std::uint64_t r) {
    OpCounter scratch;
    return is_rth_residue(ctx, delta, r, scratch);
}

Elem find_nonresidue(const FieldCtx& ctx, std::uint64_t r, std::uint64_t seed, OpCounter& counter) {
    require_divides(ctx, r);
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * r));
    for (int attempt = 0; attempt < 128; ++attempt) {
        const Elem candidate = random_element(ctx, rng);
        if (!ctx.is_zero(candidate) && !is_rth_residue(ctx, candidate, r, counter))
            return candidate;
    }
    const Int size = ctx.cardinality();
    for (Int index = 1; index < size; ++index) {
        const Elem candidate = ctx.from_index(index);
        if (!is_rth_residue(ctx, candidate, r, counter))
            return candidate;
    }
    throw std::logic_error("no r-th non-residue exists although r divides the group order");
}

Elem find_nonresidue(const FieldCtx& ctx, std::uint64_t r, std::uint64_t seed) {
    OpCounter scratch;
    return find_nonresidue(ctx, r, seed, scratch);
}

AmmContext AmmContext::make(const FieldCtx& ctx, std::uint64_t r, const Elem& rho) {
    require_divides(ctx, r);
    if (!is_prime(r))
        throw Error(ErrorCode::InvalidArgument, "AMM needs a prime r");
    AmmContext amm;
    amm.r = r;
    auto [t, s] = split_power(ctx.order_minus_one(), big(r));
    amm.t = t;
    amm.s = s;
    // s | r alpha - 1  <=>  alpha = r^{-1} mod s; alpha = 0 when s = 1.
    amm.alpha = mod_inverse(big(r) % s, s);
    if (ctx.is_zero(rho) || is_rth_residue(ctx, rho, r, amm.setup_cost))
        throw Error(ErrorCode::InvalidArgument, "rho must be an r-th non-residue");
    amm.rho = rho;
    amm.c = ctx.pow(rho, s, amm.setup_cost);
    const Elem generator = ctx.pow(amm.c, rootfield::pow(big(r), t - 1), amm.setup_cost);
    Elem k = ctx.one();
    for (std::uint64_t i = 0; i < r; ++i) {
        amm.k_index.emplace(k, i);
        amm.k_powers.push_back(k);
        k = ctx.mul(k, generator, amm.setup_cost);
    }
    if (amm.k_index.size() != r)
        throw std::logic_error("K_i are not distinct; rho^s does not have order r^t");
    return amm;
}

AmmContext AmmContext::make(const FieldCtx& ctx, std::uint64_t r, std::uint64_t seed) {
    OpCounter search;
    const Elem rho = find_nonresidue(ctx, r, seed, search);
    AmmContext amm = make(ctx, r, rho);
    amm.setup_cost += search;
    return amm;
}

RootOutcome amm_root(const FieldCtx& ctx, const Elem& delta, const AmmContext& amm, std::vector<Elem>* stage_trace) {
    const std::uint64_t r = amm.r;
    require_divides(ctx, r);
    OpCounter counter;
    if (ctx.is_zero(delta))
        return found(ctx.zero(), PathTag::Amm, counter);
    if (!is_rth_residue(ctx, delta, r, counter))
        return rejected(PathTag::Amm, r, counter);

    const Int& order = ctx.order_minus_one();
    Elem root = ctx.pow(delta, amm.alpha, counter);
    if (amm.t > 1) {
        // acc = delta^{r alpha - 1} lies in the r^{t-1}-torsion; each stage pushes it one level down.
        Int first = (big(r) * amm.alpha - 1) % order;
        if (first < 0)
            first += order;
        Elem acc = ctx.pow(delta, first, counter);
        std::vector<Elem> c_pows{amm.c};
        for (std::uint64_t i = 1; i < amm.t; ++i)
            c_pows.push_back(ctx.pow(c_pows.back(), big(r), counter));

        for (std::uint64_t i = 1; i < amm.t; ++i) {
            const Elem w = ctx.pow(acc, rootfield::pow(big(r), amm.t - 1 - i), counter);
            const auto hit = amm.k_index.find(w);
            if (hit == amm.k_index.end())
                throw std::logic_error("AMM stage value is not an r-th root of unity");
            const std::uint64_t j = (r - hit->second) % r;
            if (j != 0) {
                acc = ctx.mul(acc, ctx.pow(c_pows[i], big(j), counter), counter);
                root = ctx.mul(root, ctx.pow(c_pows[i - 1], big(j), counter), counter);
            }
            assert(ctx.is_one(ctx.pow(acc, rootfield::pow(big(r), amm.t - 1 - i))));
            if (stage_trace != nullptr)
                stage_trace->push_back(acc);
        }
        if (!ctx.is_one(acc))
            throw std::logic_error("AMM accumulator did not reach 1");
    }
    if (!check_root(ctx, root, r, delta, counter))
        throw std::logic_error("AMM produced a value that is not an r-th root");
    return found(std::move(root), PathTag::Amm, counter);
}

RootOutcome amm_root(const FieldCtx& ctx, const Elem& delta, std::uint64_t r, std::uint64_t seed) {
    require_divides(ctx, r);
    if (ctx.is_zero(delta))
        return found(ctx.zero(), PathTag::Amm, {});
    const AmmContext amm = AmmContext::make(ctx, r, seed);
    RootOutcome out = amm_root(ctx, delta, amm);
    out.counters += amm.setup_cost;
    return out;
}

namespace {

bool p_divides(const FieldCtx& ctx, std::uint64_t r) {
    return mpz_divisible_ui_p(ctx.p().get_mpz_t(), r) != 0 || std::gcd(Int(ctx.p() % big(r)).get_ui(), r) != 1;
}

}  // namespace

RootOutcome root_coprime(const FieldCtx& ctx, const Elem& delta, std::uint64_t r, PathPolicy policy) {
    if (r < 2)
        throw Error(ErrorCode::RTooSmall, "r must be at least 2");
    const Int& order = ctx.order_minus_one();
    Int g;
    mpz_gcd_ui(g.get_mpz_t(), order.get_mpz_t(), r);
    if (g != 1)
        throw Error(ErrorCode::NotCoprimeCase, "gcd(r, p^m - 1) != 1");

    const bool periodic_allowed = policy == PathPolicy::Auto || policy == PathPolicy::Periodic;
    bool use_fast = false;
    if (periodic_allowed) {
        if (p_divides(ctx, r)) {
            if (policy == PathPolicy::Periodic)
                throw Error(ErrorCode::UnsupportedPath, "no periodic decomposition when p | r");
        } else if (ctx.m() > mult_order(ctx.p(), r)) {
            use_fast = true;
        } else if (policy == PathPolicy::Periodic) {
            throw Error(ErrorCode::PeriodTooLong, "m <= k: no periodic decomposition");
        }
    }
    const PathTag path = use_fast ? PathTag::CoprimeFast : PathTag::NaiveFallback;

    OpCounter counter;
    if (ctx.is_zero(delta))
        return found(ctx.zero(), path, counter);

    Elem root;
    if (use_fast)
        root = apply_periodic(ctx, delta, decompose_coprime(ctx.p(), ctx.m(), r), counter);
    else
        root = ctx.pow(delta, mod_inverse(big(r), order), counter);
    if (!check_root(ctx, root, r, delta, counter))
        throw std::logic_error("coprime root failed verification");
    return found(std::move(root), path, counter);
}

RootOutcome root_ramified(const FieldCtx& ctx, const Elem& delta, std::uint64_t r, PathPolicy policy) {
    const CaseAnalysis info = analyze_case(ctx.p(), ctx.m(), r);
    if (info.tag != GcdTag::RamifiedExact)
        throw Error(ErrorCode::NotRamifiedCase, "r does not divide p^m - 1 exactly once");

    const bool periodic_allowed = policy == PathPolicy::Auto || policy == PathPolicy::Periodic;
    const bool long_enough = ctx.m() > info.k * r;
    if (policy == PathPolicy::Periodic && !long_enough)
        throw Error(ErrorCode::PeriodTooLong, "m <= k r: no periodic decomposition");
    const bool use_fast = periodic_allowed && long_enough;
    const PathTag path = use_fast ? PathTag::RamifiedFast : PathTag::NaiveFallback;

    OpCounter counter;
    if (ctx.is_zero(delta))
        return found(ctx.zero(), path, counter);

    const Int cofactor = ctx.order_minus_one() / big(r);
    Elem candidate;
    if (use_fast)
        candidate = apply_periodic(ctx, delta, decompose_ramified(ctx.p(), ctx.m(), r), counter);
    else
        candidate = ctx.pow(delta, mod_inverse(big(r), cofactor), counter);
    if (!check_root(ctx, candidate, r, delta, counter))
        return rejected(path, r, counter);
    return found(std::move(candidate), path, counter);
}

namespace {

struct Stage {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    GcdTag tag = GcdTag::Coprime;
    std::uint64_t alpha = 0;
    PathTag path = PathTag::NaiveFallback;
    bool frobenius_only = false;
};

Stage plan_stage(const FieldCtx& ctx, std::uint64_t prime, unsigned exponent, PathPolicy policy) {
    Stage st;
    st.prime = prime;
    st.exponent = exponent;
    if (mpz_divisible_ui_p(ctx.p().get_mpz_t(), prime) != 0) {
        // p-th roots are the inverse Frobenius, a permutation of the field.
        st.frobenius_only = true;
        st.path = PathTag::CoprimeFast;
        return st;
    }
    const CaseAnalysis info = analyze_case(ctx.p(), ctx.m(), prime);
    st.tag = info.tag;
    st.alpha = info.alpha;
    const bool periodic_allowed = policy == PathPolicy::Auto || policy == PathPolicy::Periodic;
    switch (info.tag) {
    case GcdTag::Coprime:
        st.path = periodic_allowed && ctx.m() > info.k ? PathTag::CoprimeFast : PathTag::NaiveFallback;
        if (policy == PathPolicy::Periodic && st.path != PathTag::CoprimeFast)
            throw Error(ErrorCode::PeriodTooLong, "m <= k for prime " + std::to_string(prime));
        break;
    case GcdTag::RamifiedExact:
        if (policy == PathPolicy::Amm) {
            st.path = PathTag::Amm;
        } else {
            st.path = periodic_allowed && ctx.m() > info.k * prime ? PathTag::RamifiedFast : PathTag::NaiveFallback;
            if (policy == PathPolicy::Periodic && st.path != PathTag::RamifiedFast)
                throw Error(ErrorCode::PeriodTooLong, "m <= k r for prime " + std::to_string(prime));
        }
        break;
    case GcdTag::HigherPower:
        if (policy == PathPolicy::Periodic)
            throw Error(ErrorCode::UnsupportedPath,
                        "prime " + std::to_string(prime) + " divides p^m - 1 more than once; only AMM applies");
        st.path = PathTag::Amm;
        break;
    case GcdTag::Partial:
        throw std::logic_error("prime r cannot be in the partial case");
    }
    return st;
}

}  // namespace

RootOutcome rth_root(const FieldCtx& ctx, const Elem& delta, std::uint64_t r, std::uint64_t seed, PathPolicy policy) {
    if (r < 2)
        throw Error(ErrorCode::RTooSmall, "r must be at least 2");

    std::vector<Stage> stages;
    for (const auto& [prime, e] : factor_trial(r))
        stages.push_back(plan_stage(ctx, prime, e, policy));
    const bool single = stages.size() == 1 && stages.front().exponent == 1;
    const PathTag overall = single ? stages.front().path : PathTag::CompositeChain;

    OpCounter counter;
    if (ctx.is_zero(delta))
        return found(ctx.zero(), overall, counter);

    const Int& order = ctx.order_minus_one();
    Elem current = delta;
    for (const Stage& st : stages) {
        if (st.frobenius_only) {
            const std::uint64_t m = ctx.m();
            current = ctx.frobenius(current, ((m - 1) * st.exponent) % m, counter);
            continue;
        }
        if (st.tag != GcdTag::Coprime && st.exponent > st.alpha) {
            // x -> x^{l^e} with e > alpha has the order-s subgroup as its image.
            const Int s = order / rootfield::pow(big(st.prime), st.alpha);
            if (!ctx.is_one(ctx.pow(current, s, counter)))
                return rejected(overall, st.prime, counter);
        }
        std::optional<AmmContext> amm;
        for (unsigned i = 0; i < st.exponent; ++i) {
            RootOutcome step;
            switch (st.path) {
            case PathTag::CoprimeFast:
            case PathTag::NaiveFallback:
                step = st.tag == GcdTag::Coprime
                           ? root_coprime(ctx, current, st.prime, st.path == PathTag::CoprimeFast ? PathPolicy::Periodic : PathPolicy::Naive)
                           : root_ramified(ctx, current, st.prime, PathPolicy::Naive);
                break;
            case PathTag::RamifiedFast:
                step = root_ramified(ctx, current, st.prime, PathPolicy::Periodic);
                break;
            case PathTag::Amm:
                if (!amm) {
                    amm = AmmContext::make(ctx, st.prime, seed);
                    counter += amm->setup_cost;
                }
                step = amm_root(ctx, current, *amm);
                break;
            case PathTag::CompositeChain:
                throw std::logic_error("stage cannot be a chain");
            }
            counter += step.counters;
            if (!step.found())
                return rejected(overall, st.prime, counter);
            current = *step.root;
            // With l^alpha || p^m - 1 and at least alpha further l-th roots to take, the next
            // input must stay in the order-s subgroup (s = (p^m - 1) / l^alpha); AMM may return a
            // root with a nontrivial l-part, so project it away.
            const unsigned remaining = st.exponent - i - 1;
            if (st.path == PathTag::Amm && remaining >= st.alpha) {
                const Int la = rootfield::pow(big(st.prime), st.alpha);
                const Int s = order / la;
                const Int projector = (la * mod_inverse(la % s, s)) % order;
                current = ctx.pow(current, projector, counter);
            }
        }
    }

    RootOutcome out = found(current, overall, counter);
    if (!single || stages.front().frobenius_only) {
        if (!check_root(ctx, current, r, delta, out.counters))
            throw std::logic_error("composite root failed final verification");
    }
    return out;
}

}  // namespace rootfield
