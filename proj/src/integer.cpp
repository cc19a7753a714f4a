#include "rootfield/integer.hpp"

#include "rootfield/error.hpp"

#include <charconv>

namespace rootfield {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NonPrimeP: return "NonPrimeP";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::RDividesP: return "RDividesP";
    case ErrorCode::PeriodTooLong: return "PeriodTooLong";
    case ErrorCode::NotCoprimeCase: return "NotCoprimeCase";
    case ErrorCode::NotRamifiedCase: return "NotRamifiedCase";
    case ErrorCode::ConditionsUnmet: return "ConditionsUnmet";
    case ErrorCode::RNotDividingOrder: return "RNotDividingOrder";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::RSharesFactorWithP: return "RSharesFactorWithP";
    case ErrorCode::RTooSmall: return "RTooSmall";
    case ErrorCode::UnsupportedPath: return "UnsupportedPath";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

// GMP >= 6.2 runs Baillie-PSW first, so results below 2^64 are exact; 40 rounds bound the
// remaining Miller-Rabin error by 4^-40.
bool is_prime(const Int& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

bool is_prime(std::uint64_t n) { return is_prime(Int(static_cast<unsigned long>(n))); }

Int pow(const Int& base, std::uint64_t exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

std::uint64_t floor_log2(const Int& n) {
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "floor_log2 of non-positive value");
    return mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
}

std::uint64_t ceil_log2(const Int& n) {
    const std::uint64_t f = floor_log2(n);
    return mpz_scan1(n.get_mpz_t(), 0) == f ? f : f + 1;
}

std::uint64_t ceil_log2(std::uint64_t n) { return ceil_log2(Int(static_cast<unsigned long>(n))); }

Int mod_inverse(const Int& a, const Int& modulus) {
    if (modulus == 1)
        return 0;
    Int out;
    if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw Error(ErrorCode::InvalidArgument,
                    to_string(a) + " is not invertible modulo " + to_string(modulus));
    return out;
}

std::pair<std::uint64_t, Int> split_power(const Int& n, const Int& r) {
    if (n == 0 || r < 2)
        throw Error(ErrorCode::InvalidArgument, "split_power needs n != 0 and r >= 2");
    Int rest = n;
    std::uint64_t e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), r.get_mpz_t()) != 0) {
        rest /= r;
        ++e;
    }
    return {e, rest};
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_trial(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0)
            out.emplace_back(d, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& [prime, e] : factor_trial(n))
        out.push_back(prime);
    return out;
}

bool fits_u64(const Int& n) { return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const Int& n) {
    if (!fits_u64(n))
        throw Error(ErrorCode::InvalidArgument, to_string(n) + " does not fit in 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
    return out;
}

Int parse_int(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-')
        digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw Error(ErrorCode::ParseError, "not a decimal integer: '" + std::string(text) + "'");
    return Int(std::string(text), 10);
}

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t out = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw Error(ErrorCode::ParseError, "not an unsigned 64-bit integer: '" + std::string(text) + "'");
    return out;
}

}  // namespace rootfield
