#include "rootfield/periodic.hpp"

#include "rootfield/error.hpp"

#include <numeric>
#include <stdexcept>

namespace rootfield {

std::string_view tag_name(GcdTag tag) noexcept {
    switch (tag) {
    case GcdTag::Coprime: return "coprime";
    case GcdTag::RamifiedExact: return "ramified_exact";
    case GcdTag::HigherPower: return "higher_power";
    case GcdTag::Partial: return "partial";
    }
    return "unknown";
}

std::string_view case_name(ExponentCase c) noexcept {
    return c == ExponentCase::Coprime ? "coprime" : "ramified";
}

std::uint64_t mult_order(const Int& base, std::uint64_t r) {
    if (r < 2)
        throw Error(ErrorCode::RTooSmall, "modulus r must be at least 2");
    Int reduced = base % Int(static_cast<unsigned long>(r));
    if (reduced < 0)
        reduced += static_cast<unsigned long>(r);
    const std::uint64_t b = reduced.get_ui();
    if (std::gcd(b, r) != 1)
        throw Error(ErrorCode::NotCoprime, to_string(base) + " is not coprime to " + std::to_string(r));
    using u128 = unsigned __int128;
    std::uint64_t acc = b % r;
    std::uint64_t k = 1;
    while (acc != 1 % r) {
        acc = static_cast<std::uint64_t>(static_cast<u128>(acc) * b % r);
        ++k;
    }
    return k;
}

namespace {

Int big(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

// u in [1, r) with u * value = -1 (mod r).
std::uint64_t solve_u(const Int& value, std::uint64_t r) {
    const Int rr = big(r);
    const Int inv = mod_inverse(value % rr, rr);
    Int u = (rr - inv) % rr;
    return u.get_ui();
}

Int geometric(const Int& base, std::uint64_t period, std::uint64_t n) {
    const Int step = rootfield::pow(base, period);
    return (rootfield::pow(step, n) - 1) / (step - 1);
}

// Fills z, b, a, n from v for the expansion base^m u / (r^e) = base^m z / (base^period - 1).
PeriodicExponent assemble(const Int& base, std::uint64_t base_degree, std::uint64_t m,
                          std::uint64_t r, std::uint64_t u, std::uint64_t k, std::uint64_t period,
                          ExponentCase which, const Int& v, const Int& modulus) {
    PeriodicExponent pe;
    pe.base = base;
    pe.base_degree = base_degree;
    pe.r = r;
    pe.u = u;
    pe.k = k;
    pe.period = period;
    pe.case_tag = which;
    pe.v = v;
    pe.congruence_modulus = modulus;
    pe.n = m / period;

    const Int denom = which == ExponentCase::Coprime ? big(r) : big(r) * big(r);
    const Int numer = big(u) * (rootfield::pow(base, period) - 1);
    if (mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t()) == 0)
        throw std::logic_error("integrality witness z is not integral");
    pe.z = numer / denom;
    pe.b = rootfield::pow(base, m - pe.n * period) * pe.z;
    pe.a = v - pe.b * geometric(base, period, pe.n);
    if (auto failure = check_invariants(pe))
        throw std::logic_error("periodic decomposition violates invariant: " + *failure);
    return pe;
}

}  // namespace

Int PeriodicExponent::geometric_sum() const { return geometric(base, period, n); }

std::optional<std::string> check_invariants(const PeriodicExponent& pe) {
    if (pe.n < 1)
        return "n must be at least 1";
    if (pe.a < 0 || pe.b < 0)
        return "a and b must be non-negative";
    Int sum = 0;
    for (std::uint64_t j = 0; j < pe.n; ++j)
        sum += rootfield::pow(pe.base, j * pe.period);
    if (pe.a + pe.b * sum != pe.v)
        return "a + b * G != v";
    const Int bound = rootfield::pow(pe.base, 2 * pe.period);
    if (pe.a >= bound)
        return "a exceeds base^(2 period)";
    if (pe.b >= bound)
        return "b exceeds base^(2 period)";
    Int residue = (big(pe.r) * pe.v - 1) % pe.congruence_modulus;
    if (residue != 0)
        return "r v != 1 modulo congruence modulus";
    return std::nullopt;
}

CaseAnalysis analyze_case(const Int& p, std::uint64_t m, std::uint64_t r) {
    if (r < 2)
        throw Error(ErrorCode::RTooSmall, "r must be at least 2");
    if (std::gcd(Int(p % big(r)).get_ui(), r) != 1)
        throw Error(ErrorCode::RDividesP, "r = " + std::to_string(r) + " shares a factor with p");
    const Int order = rootfield::pow(p, m) - 1;
    const Int rr = big(r);

    CaseAnalysis out;
    out.r = r;
    out.k = mult_order(p, r);
    out.alpha = split_power(order, rr).first;

    Int g;
    mpz_gcd(g.get_mpz_t(), order.get_mpz_t(), rr.get_mpz_t());
    if (g == 1) {
        out.tag = GcdTag::Coprime;
        out.u = solve_u(order, r);
    } else if (out.alpha == 0) {
        out.tag = GcdTag::Partial;
    } else {
        const Int cofactor = order / rr;
        Int h;
        mpz_gcd(h.get_mpz_t(), cofactor.get_mpz_t(), rr.get_mpz_t());
        if (h == 1) {
            out.tag = GcdTag::RamifiedExact;
            out.u = solve_u(cofactor, r);
        } else {
            out.tag = GcdTag::HigherPower;
        }
    }
    return out;
}

PeriodicExponent decompose_coprime(const Int& p, std::uint64_t m, std::uint64_t r) {
    const std::uint64_t k = mult_order(p, r);
    if (m <= k)
        throw Error(ErrorCode::PeriodTooLong,
                    "m = " + std::to_string(m) + " is not greater than k = " + std::to_string(k));
    const CaseAnalysis info = analyze_case(p, m, r);
    if (info.tag != GcdTag::Coprime)
        throw Error(ErrorCode::NotCoprimeCase, "gcd(r, p^m - 1) != 1");
    const Int pm = rootfield::pow(p, m);
    const Int v = pm * big(*info.u) / big(r);
    return assemble(p, 1, m, r, *info.u, k, k, ExponentCase::Coprime, v, pm - 1);
}

PeriodicExponent decompose_ramified(const Int& p, std::uint64_t m, std::uint64_t r) {
    const CaseAnalysis info = analyze_case(p, m, r);
    if (info.tag != GcdTag::RamifiedExact)
        throw Error(ErrorCode::NotRamifiedCase, "r does not divide p^m - 1 exactly once");
    const std::uint64_t period = info.k * r;
    if (m <= period)
        throw Error(ErrorCode::PeriodTooLong,
                    "m = " + std::to_string(m) + " is not greater than k r = " + std::to_string(period));
    const Int pm = rootfield::pow(p, m);
    const Int r2 = big(r) * big(r);
    Int v;
    const Int numer = pm * big(*info.u);
    mpz_cdiv_q(v.get_mpz_t(), numer.get_mpz_t(), r2.get_mpz_t());
    return assemble(p, 1, m, r, *info.u, info.k, period, ExponentCase::Ramified, v, (pm - 1) / big(r));
}

std::optional<std::pair<Int, std::uint64_t>> prime_power_root(const Int& q) {
    if (q < 2)
        return std::nullopt;
    const std::uint64_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
    for (std::uint64_t d = bits; d >= 1; --d) {
        Int root;
        if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), d) != 0 && is_prime(root))
            return std::make_pair(root, d);
    }
    return std::nullopt;
}

BaseQDecomposition decompose_base_q(const Int& q, std::uint64_t m, std::uint64_t r) {
    if (r < 2)
        throw Error(ErrorCode::RTooSmall, "r must be at least 2");
    const auto root = prime_power_root(q);
    if (!root)
        throw Error(ErrorCode::ConditionsUnmet, to_string(q) + " is not a prime power");
    const Int rr = big(r);

    BaseQDecomposition out;
    out.p = root->first;
    out.d = root->second;

    const Int qm = rootfield::pow(q, m);
    Int g;
    const Int qq1 = q * (q - 1);
    mpz_gcd(g.get_mpz_t(), qq1.get_mpz_t(), rr.get_mpz_t());

    if (g == 1) {
        const std::uint64_t k = mult_order(q, r);
        if (k <= 1 || std::gcd(m, k) != 1)
            throw Error(ErrorCode::ConditionsUnmet, "base-q coprime variant needs k > 1 and gcd(m, k) = 1");
        if (m < k)
            throw Error(ErrorCode::PeriodTooLong, "m < k leaves no periodic terms");
        const std::uint64_t u = solve_u(qm - 1, r);
        out.variant = BaseQVariant::Coprime;
        out.k_q = k;
        out.exponent = assemble(q, out.d, m, r, u, k, k, ExponentCase::Coprime, qm * big(u) / rr, qm - 1);
        out.k_prime = mult_order(out.p, r);
        out.n_prime = m * out.d / out.k_prime;
    } else {
        const Int q1 = q - 1;
        if (mpz_divisible_p(q1.get_mpz_t(), rr.get_mpz_t()) == 0)
            throw Error(ErrorCode::ConditionsUnmet, "neither gcd(q(q-1), r) = 1 nor r | q - 1");
        Int h;
        const Int cof = q1 / rr;
        mpz_gcd(h.get_mpz_t(), cof.get_mpz_t(), rr.get_mpz_t());
        if (h != 1 || std::gcd(m, r) != 1)
            throw Error(ErrorCode::ConditionsUnmet, "base-q ramified variant needs gcd((q-1)/r, r) = 1, gcd(m, r) = 1");
        if (m < r)
            throw Error(ErrorCode::PeriodTooLong, "m < r leaves no periodic terms");
        const std::uint64_t u = solve_u((qm - 1) / rr, r);
        Int v;
        const Int numer = qm * big(u);
        const Int r2 = rr * rr;
        mpz_cdiv_q(v.get_mpz_t(), numer.get_mpz_t(), r2.get_mpz_t());
        out.variant = BaseQVariant::Ramified;
        out.k_q = 1;
        out.exponent = assemble(q, out.d, m, r, u, 1, r, ExponentCase::Ramified, v, (qm - 1) / rr);
        out.k_prime = mult_order(out.p, r);
        out.n_prime = m * out.d / (out.k_prime * r);
    }
    out.n = out.exponent.n;
    return out;
}

}  // namespace rootfield
