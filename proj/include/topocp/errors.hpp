#pragma once

#include <stdexcept>
#include <string>

namespace topocp {

// Error taxonomy shared across the library. The CLI maps these to exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file (dataset text files, cache/checkpoint containers).
struct FormatError : Error {
  using Error::Error;
};

// Structurally inconsistent data (e.g. an edge crossing graph boundaries).
struct IntegrityError : Error {
  using Error::Error;
};

// Invalid configuration values.
struct ConfigError : Error {
  using Error::Error;
};

// Operation attempted before its prerequisites exist (missing cache, ...).
struct StateError : Error {
  using Error::Error;
};

// Versioned container whose format tag does not match this build.
struct CacheVersionError : Error {
  using Error::Error;
};

// Tensor shape/dimension mismatch.
struct ShapeError : Error {
  using Error::Error;
};

// Non-finite loss or other divergence during optimization.
struct TrainingError : Error {
  using Error::Error;
};

}  // namespace topocp
