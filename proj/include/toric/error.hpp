#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorKind {
    NotPointed,
    NotFullDimensional,
    EmptyGenerators,
    NegativeScale,
    DimensionMismatch,
    UnboundedMinimalSet,
    PointOutsideSemigroup,
    AmbientMismatch,
    ZeroIdeal,
    InvalidCartierData,
    PDividesDenominator,
    InadmissibleExponent,
    NoStabilization,
    NotPrincipal,
    IndexNotCoprime,
    AllFixedIdealsZero,
    TooManyFaces,
    PoolTooLarge,
    ParseError,
    Unsupported,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library carries a kind so callers (the CLI in
// particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace toric
