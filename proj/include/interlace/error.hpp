#pragma once

#include <stdexcept>
#include <string>

namespace interlace {

// Base of every error raised by the library. Each subclass maps onto one
// CLI exit-code class (see tools/cli.cpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A window was asked for a position outside its domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed spec, word, tiling, or serialized document.
class ParseError : public Error {
public:
    using Error::Error;
};

// A limit did not stabilize within the iteration cap.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// Substitution derivation could not extract a consistent period.
class DerivationError : public Error {
public:
    using Error::Error;
};

// A fixed-point or hierarchy check could not be set up (misaligned input).
class VerificationError : public Error {
public:
    using Error::Error;
};

// Not enough window to decide a property (e.g. minimal period).
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// Operation called outside its supported setting.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// Bad command-line or export request (unknown format, radius out of range).
class UsageError : public Error {
public:
    using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace interlace
