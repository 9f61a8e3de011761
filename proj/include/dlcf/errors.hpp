#pragma once

#include <stdexcept>
#include <string>

namespace dlcf {

/// Input exceeds a configured computational bound.
class SizeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Division by zero in an exact field.
class DivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A cyclotomic value cannot be expressed at the requested level.
class RepresentationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Shapes of matrices, vectors or partitions do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A label, spec or argument is malformed or unsupported.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (oracle mismatch, bad expansion).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dlcf
