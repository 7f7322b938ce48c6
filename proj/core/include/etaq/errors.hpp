#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace etaq {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inversion or negative power of a series whose constant term is not +1 or -1.
class NotAUnit : public Error {
public:
    using Error::Error;
};

/// An equality or claim check was asked for more coefficients than are tracked.
class InsufficientPrecision : public Error {
public:
    using Error::Error;
};

/// A regular-overpartition pair (ell, mu) with gcd(ell, mu) != 1.
class NotCoprime : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration requested beyond the configured bound.
class TooLarge : public Error {
public:
    using Error::Error;
};

class UnknownIdentity : public Error {
public:
    using Error::Error;
};

class UnknownCheck : public Error {
public:
    using Error::Error;
};

/// Raised by the quotient grammar; carries the offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace etaq
