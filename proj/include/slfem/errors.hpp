#pragma once

#include <stdexcept>
#include <string>

namespace slfem {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unsupported option values, missing labels, bad run configuration.
struct ConfigError : Error {
  using Error::Error;
};

/// Invalid or degenerate geometry (inverted elements, off-arc nodes, ...).
struct GeometryError : Error {
  using Error::Error;
};

/// Malformed input files or expressions.
struct ParseError : Error {
  using Error::Error;
};

/// Linear algebra failures (singular or indefinite systems).
struct SolverError : Error {
  using Error::Error;
};

/// Violated call contracts (mismatched sizes and the like).
struct ContractError : Error {
  using Error::Error;
};

}  // namespace slfem
