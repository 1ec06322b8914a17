#pragma once

#include <stdexcept>
#include <string>

namespace tiltfactor {

// Malformed input: invalid (type, rank) pair, non-dominant weight where a
// dominant one is required, non-prime p, mismatched data, malformed combos.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation was refused because its estimated cost exceeds the
// configured budget. The message states the estimate and the limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A weight falls outside the character oracles implemented here
// (general modular simple/tilting characters are out of scope).
// The message names the offending weight or digit.
class CoverageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tiltfactor
