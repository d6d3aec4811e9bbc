#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wp {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// An element was not invertible modulo the given modulus.
struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

/// 27*g3^2 == g2^3: the cubic 4t^3 - g2 t - g3 has a repeated root.
struct DegenerateCurve : Error {
    explicit DegenerateCurve(const std::string& what) : Error(what) {}
};

/// q fails the field requirements (degree < 3 or not squarefree).
struct InvalidField : Error {
    explicit InvalidField(const std::string& what) : Error(what) {}
};

/// q has nonconstant coefficients and the caller did not opt in to the
/// constant-special-points assumption.
struct HypothesisNotAssured : Error {
    explicit HypothesisNotAssured(const std::string& what) : Error(what) {}
};

/// A computation certified that the constant-special-points assumption fails
/// for this field.
struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// A broken internal invariant; always a defect, never a user error.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(what) {}
};

/// Syntax error in an input expression. `offset` is the byte position.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : Error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

}  // namespace wp
