#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bayesext {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised by operations that are undefined on the given value
/// (valuation of zero, standard part of an infinite element, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands come from different algebras or stages.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

/// An element no longer belongs to the latest stage and cannot be mapped forward.
class StaleElement : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The stage growth guard refused to build a stage.
class GrowthLimitExceeded : public Error {
 public:
  GrowthLimitExceeded(std::size_t requested, std::size_t limit)
      : Error("extension would create " + std::to_string(requested) +
              " atoms, limit is " + std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  std::size_t requested() const { return requested_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bayesext
