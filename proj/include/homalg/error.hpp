#pragma once

#include <stdexcept>
#include <string>

namespace homalg {

enum class ErrorKind {
    ZeroDenominator,
    DivisionByZero,
    SpecializedDenominatorZero,
    UnboundParameter,
    DimensionMismatch,
    SingularMap,
    NotEndomorphism,
    MissingTwistMap,
    UnboundVariable,
    NotMultilinear,
    UnknownIdentity,
    UnknownKey,
    Parse,
    UndeclaredParameter,
    Arity,
    Validation,
    Io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library. The kind is
/// stable and is what callers and tests dispatch on.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace homalg
