#include "bezout/rational.hpp"

#include "bezout/error.hpp"

#include <cctype>

namespace bezout {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::UnsupportedArity: return "UnsupportedArity";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NonPrimeLeadingForm: return "NonPrimeLeadingForm";
    case ErrorCode::WeightWindowViolation: return "WeightWindowViolation";
    case ErrorCode::UnsupportedChain: return "UnsupportedChain";
    case ErrorCode::ConstantComponent: return "ConstantComponent";
    case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorCode::InfiniteFiber: return "InfiniteFiber";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::AllInconclusive: return "AllInconclusive";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

SyntaxError::SyntaxError(std::size_t position, std::string expected, std::string found)
    : Error(ErrorCode::SyntaxError,
            "at position " + std::to_string(position) + ": expected " + expected + ", found " + found),
      position_(position), expected_(std::move(expected))
{
}

void raise(ErrorCode code, const std::string& message)
{
    throw Error(code, message);
}

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        raise(ErrorCode::InvalidArgument, "zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        raise(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (negative) {
        n = -n;
    }
    return make_rational(n, d);
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

bool is_integer(const Rational& value)
{
    return value.get_den() == 1;
}

Rational pow(const Rational& base, std::uint64_t exponent)
{
    Rational result(1);
    Rational b = base;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            b *= b;
        }
    }
    return result;
}

} // namespace bezout
