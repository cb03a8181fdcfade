#pragma once

#include <stdexcept>
#include <string>

namespace hrr2 {

// Caller-facing failures. Internal invariant violations use std::logic_error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not fit (non-square, |I| != |J|, wrong tuple length).
class DimensionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// Input outside the mathematical domain (zero form, zero polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration or truncation limits exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A hypothesis the operation relies on does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace hrr2
