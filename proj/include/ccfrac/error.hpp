#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ccfrac {

enum class ErrorCode {
    DivisionByZero,
    MixedRadicand,
    InvalidRadicand,
    ParseError,
    PositiveRadicand,
    InfiniteFraction,
    InvalidFraction,
    RealIrrational,
    RationalInput,
    InvalidContinuedFraction,
    NotACorner,
    TooShort,
    IterationLimit,
    DegenerateLattice,
    NotUnimodular,
    WrongSignature,
    SquareDiscriminant,
    InvalidWord,
    OutOfHalfPlane,
    NotUpperHalfPlane,
    Unrelated,
    NotNeighbors,
};

/// Stable name of an error code; the CLI reports these verbatim.
constexpr std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedRadicand: return "MixedRadicand";
    case ErrorCode::InvalidRadicand: return "InvalidRadicand";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PositiveRadicand: return "PositiveRadicand";
    case ErrorCode::InfiniteFraction: return "InfiniteFraction";
    case ErrorCode::InvalidFraction: return "InvalidFraction";
    case ErrorCode::RealIrrational: return "RealIrrational";
    case ErrorCode::RationalInput: return "RationalInput";
    case ErrorCode::InvalidContinuedFraction: return "InvalidContinuedFraction";
    case ErrorCode::NotACorner: return "NotACorner";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::IterationLimit: return "IterationLimit";
    case ErrorCode::DegenerateLattice: return "DegenerateLattice";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::WrongSignature: return "WrongSignature";
    case ErrorCode::SquareDiscriminant: return "SquareDiscriminant";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::OutOfHalfPlane: return "OutOfHalfPlane";
    case ErrorCode::NotUpperHalfPlane: return "NotUpperHalfPlane";
    case ErrorCode::Unrelated: return "Unrelated";
    case ErrorCode::NotNeighbors: return "NotNeighbors";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure carrying the byte offset into the input text.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : Error(ErrorCode::ParseError, message + " at offset " + std::to_string(offset)),
          offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace ccfrac
