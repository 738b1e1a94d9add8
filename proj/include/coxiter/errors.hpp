#pragma once

#include <stdexcept>
#include <string>

namespace coxiter {

// Base class for all library errors. Subclasses map onto the CLI exit codes
// in tools/main.cpp.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid ring datum (degenerate coefficients, empty blocks, ...).
struct ValidationError : Error {
  using Error::Error;
};

struct DegenerateCoefficientsError : ValidationError {
  using ValidationError::ValidationError;
};

struct EmptyBlockError : ValidationError {
  using ValidationError::ValidationError;
};

struct NonpositiveExponentError : ValidationError {
  using ValidationError::ValidationError;
};

struct TooFewBlocksError : ValidationError {
  using ValidationError::ValidationError;
};

// Operation applied to the wrong construction type (Type 1 vs Type 2).
struct WrongTypeError : Error {
  using Error::Error;
};

struct NotRationalError : Error {
  using Error::Error;
};

struct NotGcdOrderedError : Error {
  using Error::Error;
};

// Type 1 blocks not decreasingly ordered by block gcd.
struct NotOrderedError : Error {
  using Error::Error;
};

struct NotHyperplatonicError : Error {
  using Error::Error;
};

// cox_step on a factorial datum: there is no step to take.
struct FactorialError : Error {
  using Error::Error;
};

struct NonRationalStepError : Error {
  explicit NonRationalStepError(std::size_t step)
      : Error("iteration step " + std::to_string(step) +
              " is not rational; no Cox ring iteration exists"),
        step_index(step) {}
  std::size_t step_index;
};

struct StepLimitExceededError : Error {
  using Error::Error;
};

struct UnclassifiableChainError : Error {
  using Error::Error;
};

// JSON document does not deserialize to a ring datum; carries a field path.
struct ParseError : Error {
  ParseError(const std::string& path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), field_path(path) {}
  std::string field_path;
};

}  // namespace coxiter
