#pragma once

#include <stdexcept>
#include <string>

namespace sympinv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
};

/// Operands live over different fields.
class FieldMismatch : public DomainError {
 public:
  FieldMismatch() : DomainError("operands belong to different fields") {}
};

/// The operation is not available over the given field (e.g. factoring over Q).
class UnsupportedField : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotSymplectic : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace sympinv
