#pragma once

#include <stdexcept>
#include <string>

namespace delegation {

/// Malformed input: unparsable files, bad field shapes, invalid literals.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a model constraint (bad menu index,
/// probabilities not summing to one, parameter out of range).
class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured enumeration cap would be exceeded.
class CapExceeded : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

}  // namespace delegation
