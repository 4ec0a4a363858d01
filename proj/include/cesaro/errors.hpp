#pragma once

#include <stdexcept>
#include <string>

namespace cesaro {

/// Input outside the domain of a function or operator (t < 0, x <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed argument: bad spec string, unsupported space, invalid exponent.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested window or size exceeds what the finite model can represent.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The object degenerates (phi vanishing identically, bounded phi where
/// an unbounded one is required).
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Broken internal certificate, e.g. an LP that turned out unbounded.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cesaro
