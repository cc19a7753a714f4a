#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rootfield {

enum class ErrorCode {
    NonPrimeP,
    ReducibleModulus,
    DegreeMismatch,
    ZeroInverse,
    NotCoprime,
    RDividesP,
    PeriodTooLong,
    NotCoprimeCase,
    NotRamifiedCase,
    ConditionsUnmet,
    RNotDividingOrder,
    ZeroElement,
    RSharesFactorWithP,
    RTooSmall,
    UnsupportedPath,
    FieldTooLarge,
    ParseError,
    InvalidArgument,
};

std::string_view error_name(ErrorCode code) noexcept;

// All library failures surface as this exception; `code()` identifies the contract violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace rootfield
