#pragma once

#include <stdexcept>
#include <string>

namespace utroots {

// Thrown when a modulus fails the primality check.
struct NonPrimeModulus : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when operands disagree on modulus or dimension, or an index is out
// of the range a call requires.
struct MismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown by inverse() of the zero field element.
struct InversionOfZero : std::domain_error {
  using std::domain_error::domain_error;
};

// Thrown by the matrix reader; message names the offending entry 1-based.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a subgroup closure exceeds its element budget.
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace utroots
