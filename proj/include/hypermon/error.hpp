#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypermon {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed formula or trace text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnboundVariableError : public Error {
public:
    using Error::Error;
};

class DuplicateBinderError : public Error {
public:
    using Error::Error;
};

/// An automaton construction exceeded a configured limit (states, alphabet, clauses).
class ResourceError : public Error {
public:
    using Error::Error;
};

class SupportMismatchError : public Error {
public:
    using Error::Error;
};

/// The quantifier prefix is not supported by the requested operation.
class FragmentError : public Error {
public:
    using Error::Error;
};

class ArityError : public Error {
public:
    using Error::Error;
};

class VariableNotFreeError : public Error {
public:
    using Error::Error;
};

class UncoveredVariableError : public Error {
public:
    using Error::Error;
};

class CircuitError : public Error {
public:
    using Error::Error;
};

}  // namespace hypermon
