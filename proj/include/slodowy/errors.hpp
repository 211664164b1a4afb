#pragma once

#include <stdexcept>
#include <string>

namespace slodowy {

/// Malformed or out-of-range arguments (bad partition, unknown format, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two partitions are not in the relation an operation requires.
class RelationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically invalid input, e.g. a non-nilpotent matrix where a nilpotent is expected.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Broken internal invariant; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A bounded search (degree-bounded lift, truncated solve) found nothing.
/// This is not a mathematical verdict.
class BoundedSearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested computation exceeds the configured size budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slodowy
