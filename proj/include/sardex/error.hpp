#pragma once

#include <stdexcept>
#include <string>

namespace sardex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, decimals, digit strings).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of the operation, e.g. x outside [0, M].
class RangeError : public Error {
public:
    using Error::Error;
};

/// Division by zero in the exact field or the interval type.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// The family parameter violates 2 < 3^(1/(1+alpha)).
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// Exact mode requested for alpha != 1/2, or exact and float values mixed.
class ModeError : public Error {
public:
    using Error::Error;
};

/// A gap or component address that does not exist.
class AddressError : public Error {
public:
    using Error::Error;
};

/// A ternary expansion containing the digit 1 where a Cantor point was expected.
class NotInCantorSet : public Error {
public:
    using Error::Error;
};

/// A float-mode enclosure straddles a gap boundary, so the branch taken by the
/// descent cannot be certified at the current precision.
class BoundaryAmbiguity : public Error {
public:
    BoundaryAmbiguity(int level, std::string index)
        : Error("enclosure straddles a boundary of gap J(" + std::to_string(level) + "," + index +
                "); raise --precision"),
          level_(level), index_(std::move(index))
    {
    }

    int level() const { return level_; }
    const std::string& index() const { return index_; }

private:
    int level_;
    std::string index_;
};

} // namespace sardex
