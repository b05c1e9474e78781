#pragma once

#include <stdexcept>
#include <string>

namespace alab {

// Base class for all library errors so callers can catch everything from
// this toolkit with one handler and still map kinds to exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed model input: non-stochastic rows, duplicate functions, bad files.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// Iterative solver exceeded its iteration cap.
class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what) : Error(what) {}
};

// Requested object exceeds a tractability guard.
class SizeError : public Error {
 public:
  explicit SizeError(const std::string& what) : Error(what) {}
};

// Runtime failures inside an episode or the exact-enumeration oracle:
// impossible observations, degenerate beliefs, runaway episodes.
class SimulationError : public Error {
 public:
  explicit SimulationError(const std::string& what) : Error(what) {}
};

}  // namespace alab
