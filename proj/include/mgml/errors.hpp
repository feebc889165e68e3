#pragma once

#include <stdexcept>
#include <string>

namespace mgml {

// Runtime failure (I/O, corrupt files, exhausted retries). CLI exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid user input: bad flags, configs or annotations. CLI exit code 1.
struct ValidationError : Error {
  using Error::Error;
};

// Tensor dimension / shape contract violation.
struct ShapeError : Error {
  using Error::Error;
};

// Malformed input file; the message carries the offending location.
struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};

// A sampled class lacks the required number of support instances.
struct InsufficientShotsError : ValidationError {
  using ValidationError::ValidationError;
};

}  // namespace mgml
