#pragma once

#include <stdexcept>
#include <string>

namespace frdirac {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A Gamma/digamma/connection-formula argument landed on a pole.
struct PoleError : Error {
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Dimension or index outside the supported range.
struct SizeError : Error {
  explicit SizeError(const std::string& msg) : Error(msg) {}
};

// Parameter outside an operation's admissible range (not a pole).
struct ParameterError : Error {
  explicit ParameterError(const std::string& msg) : Error(msg) {}
};

// A series or extrapolation failed to reach its accuracy target.
struct PrecisionError : Error {
  explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

// A least-squares fit was under-determined or ill-conditioned.
struct ConditioningError : Error {
  explicit ConditioningError(const std::string& msg) : Error(msg) {}
};

// Inward ODE integration picked up the growing mode.
struct ContaminationError : Error {
  explicit ContaminationError(const std::string& msg) : Error(msg) {}
};

// Line search or descent loop failed to make progress.
struct OptimizationError : Error {
  explicit OptimizationError(const std::string& msg) : Error(msg) {}
};

// Functional denominator (or similar) vanished.
struct DegenerateError : Error {
  explicit DegenerateError(const std::string& msg) : Error(msg) {}
};

}  // namespace frdirac
