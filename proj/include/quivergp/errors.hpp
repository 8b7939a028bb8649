#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qgp {

// Malformed input document (missing keys, wrong JSON types).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid input; carries the list of violated invariants.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what,
                           std::vector<std::string> violations = {})
      : std::runtime_error(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// The relation-avoiding path language is not finite (or exceeds the cap).
class NonAdmissibleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidWalkError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotGentleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotGorensteinError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotProjectiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ProjectiveSummandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotGorensteinProjectiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonMonomialDerivativeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MethodInapplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResolutionDepthExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A paper-backed structural invariant failed on data that claims to satisfy it.
class PropertyViolationError : public std::runtime_error {
 public:
  explicit PropertyViolationError(const std::string& what,
                                  std::vector<std::string> witnesses = {})
      : std::runtime_error(what), witnesses_(std::move(witnesses)) {}
  const std::vector<std::string>& witnesses() const { return witnesses_; }

 private:
  std::vector<std::string> witnesses_;
};

// Engine self-check failure; indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qgp
