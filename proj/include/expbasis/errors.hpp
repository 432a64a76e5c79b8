#pragma once

#include <stdexcept>
#include <string>

namespace expbasis {

enum class ErrorKind {
    InvalidArgument,
    Parse,
    DimensionMismatch,
    DuplicateCube,
    Overlap,
    Overflow,
    ConvergenceFailure,
    RadiusTooSmall,
    DegenerateDiagonal,
    DegenerateDenominator,
    RankDeficient,
    MissingOrigin,
    SectionTooLarge,
    ZeroVector,
    NotABasis,
    TooManyCells,
};

const char* errorKindName(ErrorKind kind);

/// Library error. The kind selects the CLI exit code; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(errorKindName(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for failures of the numerics rather than of the input.
    bool isNumerical() const noexcept {
        return kind_ == ErrorKind::ConvergenceFailure || kind_ == ErrorKind::Overflow;
    }

private:
    ErrorKind kind_;
};

}  // namespace expbasis
