#pragma once

#include <stdexcept>
#include <string>

namespace dbatk {

/// Base of every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand sets, maps or tables do not fit the structure they are used with.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input text or JSON could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A precondition of a construction does not hold (not a homomorphism,
/// not fully contextual, not a CTSCR, ...).
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Something a theorem guarantees failed to materialize; always a bug in
/// this library or invalid input that slipped past validation.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

}  // namespace dbatk
