#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bezout {

enum class ErrorCode {
    SyntaxError,
    UnknownVariable,
    AmbientMismatch,
    InvalidArgument,
    ExponentOverflow,
    DegreeZero,
    UnsupportedArity,
    ZeroPolynomial,
    NonPrimeLeadingForm,
    WeightWindowViolation,
    UnsupportedChain,
    ConstantComponent,
    CutoffTooSmall,
    InfiniteFiber,
    Inconclusive,
    AllInconclusive,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code is the
/// machine-readable part; the CLI maps it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with the byte offset into the source and what was expected there.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, std::string expected, std::string found);

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

} // namespace bezout
