#pragma once

#include <stdexcept>
#include <string>

namespace cydesing {

// Root of the library's exception hierarchy. The three direct families map
// onto the CLI's exit codes: ParseError -> 2, PreconditionError -> 3,
// CapExceeded -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class DivisionByZero : public PreconditionError {
 public:
  DivisionByZero() : PreconditionError("division by zero") {}
};

class NotASubgroup : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotNormal : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class LatticeNotPreserved : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class SplittingNotPreserved : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class MissingTableEntry : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Raised when a self-check on a computed result fails; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cydesing
