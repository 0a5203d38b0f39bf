#pragma once

#include <stdexcept>
#include <string>

namespace preop {

/// Base class for every error thrown by the library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Incompatible field configurations or ambient algebras.
class config_error : public error {
 public:
  using error::error;
};

/// Inverse of zero requested.
class division_by_zero : public error {
 public:
  division_by_zero() : error("division by zero") {}
};

/// Malformed or inconsistent algebra document.
class load_error : public error {
 public:
  using error::error;
};

/// Operation applied to cochains of unsupported or mismatched degree.
class degree_error : public error {
 public:
  using error::error;
};

/// Composition slot index out of range.
class position_error : public error {
 public:
  using error::error;
};

/// Evaluation argument count does not match the cochain degree.
class arity_error : public error {
 public:
  using error::error;
};

/// Result tensor or matrix would exceed the configured memory cap.
class resource_error : public error {
 public:
  using error::error;
};

/// Matrix or vector dimensions do not line up.
class dimension_error : public error {
 public:
  using error::error;
};

/// Im delta is not contained in Ker delta; carries a witness vector.
class inclusion_error : public error {
 public:
  using error::error;
};

/// Cohomology requested for a non-associative product; carries the witness triple.
class associativity_error : public error {
 public:
  using error::error;
};

/// A value violated an operation's contract (e.g. a non-cocycle representative).
class contract_error : public error {
 public:
  using error::error;
};

}  // namespace preop
