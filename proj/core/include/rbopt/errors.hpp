#pragma once

#include <stdexcept>
#include <string>

namespace rbopt {

/// Degenerate suspension geometry (zero-length rocker arm and the like).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quasi-static force balance has no solution with all wheels loaded.
class InstabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A metric or the aggregated fitness came out non-finite.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad experiment configuration (file, schema, or value range).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rbopt
