#include "support.hpp"

#include <rootfield/error.hpp>
#include <rootfield/periodic.hpp>

#include <doctest.h>

using namespace rootfield;
using support::u64;

namespace {

Int big(u64 v) { return Int(static_cast<unsigned long>(v)); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

// Exact-integer restatement of the decomposition contract, written without the library's
// own invariant checker.
void check_exponent(const PeriodicExponent& pe, const Int& base, u64 m) {
    const Int N = rootfield::pow(base, m) - 1;
    const Int modulus = pe.case_tag == ExponentCase::Coprime ? N : N / big(pe.r);
    CHECK(pe.congruence_modulus == modulus);
    CHECK((big(pe.r) * pe.v) % modulus == 1);
    Int G = 0;
    for (u64 j = 0; j < pe.n; ++j)
        G += rootfield::pow(base, j * pe.period);
    CHECK(pe.a + pe.b * G == pe.v);
    const Int bound = rootfield::pow(base, 2 * pe.period);
    CHECK(pe.a >= 0);
    CHECK(pe.b >= 0);
    CHECK(pe.a < bound);
    CHECK(pe.b < bound);
    CHECK(pe.n * pe.period <= m);
    CHECK_FALSE(check_invariants(pe).has_value());
}

}  // namespace

TEST_CASE("multiplicative order") {
    CHECK(mult_order(3, 5) == 4);
    CHECK(mult_order(7, 2) == 1);
    CHECK(mult_order(2, 7) == 3);
    CHECK(code_of([] { mult_order(6, 3); }) == ErrorCode::NotCoprime);
    for (u64 r : support::primes_upto(200))
        for (u64 b = 2; b < 60; ++b)
            if (b % r != 0)
                CHECK(mult_order(big(b), r) == support::order_mod(b, r));
}

TEST_CASE("case analysis") {
    const CaseAnalysis a = analyze_case(3, 9, 5);
    CHECK(a.tag == GcdTag::Coprime);
    CHECK(a.k == 4);
    CHECK(a.u == 2);

    const CaseAnalysis b = analyze_case(7, 5, 2);
    CHECK(b.tag == GcdTag::RamifiedExact);
    CHECK(b.k == 1);
    CHECK(b.u == 1);

    const CaseAnalysis c = analyze_case(13, 1, 2);
    CHECK(c.tag == GcdTag::HigherPower);
    CHECK(c.alpha == 2);

    CHECK(code_of([] { analyze_case(3, 2, 1); }) == ErrorCode::RTooSmall);
    CHECK(code_of([] { analyze_case(3, 2, 6); }) == ErrorCode::RDividesP);
}

TEST_CASE("coprime decompositions") {
    const PeriodicExponent a = decompose_coprime(3, 9, 5);
    CHECK(a.v == 7873);
    CHECK(a.k == 4);
    CHECK(a.n == 2);
    CHECK(a.b == 96);
    CHECK(a.a == 1);
    CHECK(a.geometric_sum() == 82);
    check_exponent(a, 3, 9);

    const PeriodicExponent b = decompose_coprime(2, 10, 7);
    CHECK(b.v == 877);
    CHECK(b.k == 3);
    CHECK(b.n == 3);
    CHECK(b.b == 12);
    CHECK(b.a == 1);
    CHECK(b.geometric_sum() == 73);
    check_exponent(b, 2, 10);

    CHECK(code_of([] { decompose_coprime(3, 4, 5); }) == ErrorCode::PeriodTooLong);
    CHECK(code_of([] { decompose_coprime(7, 5, 2); }) == ErrorCode::NotCoprimeCase);
}

TEST_CASE("ramified decompositions") {
    const PeriodicExponent a = decompose_ramified(7, 5, 2);
    CHECK(a.v == 4202);
    CHECK(a.period == 2);
    CHECK(a.n == 2);
    CHECK(a.b == 84);
    CHECK(a.a == 2);
    CHECK(a.z == 12);
    CHECK(a.geometric_sum() == 50);
    check_exponent(a, 7, 5);

    CHECK(code_of([] { decompose_ramified(7, 2, 2); }) == ErrorCode::NotRamifiedCase);
    CHECK(code_of([] { decompose_ramified(3, 9, 5); }) == ErrorCode::NotRamifiedCase);
    CHECK(code_of([] { decompose_ramified(3, 2, 2); }) == ErrorCode::NotRamifiedCase);
}

TEST_CASE("base-q decompositions") {
    const BaseQDecomposition a = decompose_base_q(4, 5, 7);
    CHECK(a.k_q == 3);
    CHECK(a.n == 1);
    CHECK(a.exponent.v == 877);
    CHECK(a.n_prime == 3);
    CHECK(a.k_prime == 3);
    check_exponent(a.exponent, 4, 5);

    const BaseQDecomposition b = decompose_base_q(9, 5, 5);
    CHECK(b.k_q == 2);
    CHECK(b.n == 2);
    CHECK(b.k_prime == 4);
    CHECK(b.n_prime == 2);
    check_exponent(b.exponent, 9, 5);

    CHECK(code_of([] { decompose_base_q(4, 6, 7); }) == ErrorCode::ConditionsUnmet);
    CHECK(code_of([] { decompose_base_q(6, 5, 7); }) == ErrorCode::ConditionsUnmet);

    CHECK(prime_power_root(Int(81)) == std::make_pair(Int(3), u64{4}));
    CHECK_FALSE(prime_power_root(Int(12)).has_value());
}

TEST_CASE("property: seeded decompositions satisfy the exact contract") {
    std::mt19937_64 rng(0xDEC0);
    const auto primes = support::primes_upto(101);
    int coprime = 0, ramified = 0;
    for (int trial = 0; trial < 3000 && (coprime < 150 || ramified < 60); ++trial) {
        const u64 p = primes[support::draw(rng, 0, 24)];  // p <= 97
        const u64 m = support::draw(rng, 1, 64);
        const u64 r = primes[support::draw(rng, 0, primes.size() - 1)];
        if (p == r)
            continue;
        const CaseAnalysis info = analyze_case(big(p), m, r);
        CAPTURE(p);
        CAPTURE(m);
        CAPTURE(r);
        if (info.tag == GcdTag::Coprime && m > info.k) {
            check_exponent(decompose_coprime(big(p), m, r), big(p), m);
            ++coprime;
        } else if (info.tag == GcdTag::RamifiedExact && m > info.k * r) {
            check_exponent(decompose_ramified(big(p), m, r), big(p), m);
            ++ramified;
        }
    }
    CHECK(coprime >= 150);
    CHECK(ramified >= 20);
}

TEST_CASE("property: base-p length never falls below base-q length") {
    for (u64 p : {2, 3, 5, 7})
        for (u64 d = 1; d <= 3; ++d)
            for (u64 m = 2; m <= 20; ++m)
                for (u64 r : support::primes_upto(23)) {
                    const Int q = rootfield::pow(big(p), d);
                    try {
                        const BaseQDecomposition dq = decompose_base_q(q, m, r);
                        CAPTURE(p);
                        CAPTURE(d);
                        CAPTURE(m);
                        CAPTURE(r);
                        CHECK(dq.n_prime >= dq.n);
                        check_exponent(dq.exponent, q, m);
                    } catch (const Error&) {
                    }
                }
}
