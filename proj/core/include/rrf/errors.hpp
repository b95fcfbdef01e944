#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rrf {

// Base class for all library errors. Subclasses mirror the failure
// categories of the public contracts so callers can catch selectively.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Array extents do not line up (matrix products, layer chaining, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// An API precondition was violated (wrong head size, open polyline, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Invalid run configuration (bad key, violated invariant, empty dataset).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Index or step outside its valid interval.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Optimization produced a non-finite quantity. Carries the layer index
// of the offending tensor when known (-1 otherwise).
class TrainingError : public Error {
 public:
  TrainingError(const std::string& what, int layer_index = -1)
      : Error(what), layer(layer_index) {}
  int layer;
};

// Malformed serialized payload. Carries the byte offset of the defect.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t byte_offset)
      : Error(what + " (at byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  std::size_t offset;
};

// A pipeline stage was invoked before its input artifacts exist.
class DependencyError : public Error {
 public:
  using Error::Error;
};

// Evaluation cannot proceed (all-empty heatmap, class imbalance, ...).
class EvalError : public Error {
 public:
  using Error::Error;
};

// Dataset generation failed (unreachable goal cell, ...).
class GenerationError : public Error {
 public:
  using Error::Error;
};

// SDE integration left the finite domain. Carries the step index.
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, std::size_t step_index)
      : Error(what + " (step " + std::to_string(step_index) + ")"),
        step(step_index) {}
  std::size_t step;
};

}  // namespace rrf
