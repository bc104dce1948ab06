#pragma once

#include <stdexcept>
#include <string>

namespace sparsehfs {

/// Invalid graph construction input (bad endpoint, nonpositive weight, self-loop).
class graph_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Vector/graph size mismatch.
class dimension_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Operation requires a connected graph (or a graph with a usable nullspace).
class connectivity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Iterative solver ran out of iterations. Carries the last relative residual.
class convergence_error : public std::runtime_error {
public:
  convergence_error(const std::string& what, double residual, int iterations)
      : std::runtime_error(what), residual(residual), iterations(iterations) {}
  double residual;
  int iterations;
};

/// Malformed input file. line == 0 means the location is unknown.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

/// Invalid configuration value (CLI or config file).
class config_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Generic I/O failure (file missing, not writable).
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace sparsehfs
