#pragma once

#include <stdexcept>
#include <string>

namespace dtk {

/// Argument outside the domain of an operation (box outside a diagram,
/// division by the zero function, negative point count, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation of a rational function at one of its poles.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A result that theory guarantees was not obtained. Always indicates a bug
/// (or corrupted input that slipped past validation).
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a documented constraint.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dtk
