#pragma once

#include <stdexcept>
#include <string>

namespace mdgm {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operand shapes or widths do not line up.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input outside an operation's mathematical domain (log of negative, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Point fails its manifold constraint beyond tolerance.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Index outside a valid range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Malformed text input (signature grammar, TSV/CSV rows, JSON config).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally valid config that violates a constraint.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// NaN/Inf produced where finite values are required, or divergence.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Object used outside its valid lifetime (stale tape, missing gradient).
class StateError : public Error {
public:
    using Error::Error;
};

}  // namespace mdgm
