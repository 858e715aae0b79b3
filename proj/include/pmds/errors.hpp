#pragma once

#include <stdexcept>
#include <string>

namespace pmds {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Elements or matrices from two different fields were combined.
class FieldMismatchError : public Error {
public:
    explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

/// Division by zero / inverse of zero.
class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// A precondition on an operation's arguments was violated.
class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

/// Malformed file or literal input.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// A configured search budget would be exceeded.
class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

/// Received word is not a corrupted codeword of the given code.
class DecodeFailureError : public Error {
public:
    explicit DecodeFailureError(const std::string& what) : Error(what) {}
};

/// Erasure pattern not served by the structured decoder; use the generic one.
class PatternOutsideFamilyError : public Error {
public:
    explicit PatternOutsideFamilyError(const std::string& what) : Error(what) {}
};

}  // namespace pmds
