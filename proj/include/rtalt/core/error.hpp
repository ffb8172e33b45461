#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rtalt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed machine text (not valid JSON, bad rational literal, ...).
class SyntaxError : public Error {
public:
    using Error::Error;
};

/// Well-formed text whose structure does not match the machine schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// An amplitude written with an irrational (algebraic) expression.
/// Only Gaussian rationals are supported; algebraic amplitudes would need
/// QFA minimization, which this library does not implement.
class AlgebraicAmplitudeError : public SchemaError {
public:
    using SchemaError::SchemaError;
};

/// A structurally complete description that violates a model invariant.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> violations);

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// An input word uses a symbol outside the machine alphabet.
class SymbolError : public Error {
public:
    using Error::Error;
};

} // namespace rtalt
