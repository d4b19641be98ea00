#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fdalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class AlgebraMismatch : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class NotAssociative : public Error {
public:
    using Error::Error;
};

class OrderMismatch : public Error {
public:
    using Error::Error;
};

class FactorMismatch : public Error {
public:
    using Error::Error;
};

class SourceMismatch : public Error {
public:
    using Error::Error;
};

class BadSplit : public Error {
public:
    using Error::Error;
};

class SingularBasisChange : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

/// A required structural property of an input (unit, associativity of the
/// carrier, supported field) does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A finite operation table claimed to be a ring fails one of the ring axioms.
class NotARing : public Error {
public:
    using Error::Error;
};

/// Malformed literal or file. `line` is 0 when the position is unknown.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error(line == 0 ? reason : "line " + std::to_string(line) + ": " + reason),
          line_(line), reason_(reason) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

/// A parsed value violates a domain invariant; `invariant()` names it.
class ValidationError : public Error {
public:
    ValidationError(std::string invariant, const std::string& detail)
        : Error("validation failed (" + invariant + "): " + detail),
          invariant_(std::move(invariant)) {}

    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

} // namespace fdalg
