// Exception hierarchy used by every module.  The command line tool maps
// ConfigError to exit code 2 and the runtime errors to exit code 3.
#pragma once

#include <stdexcept>
#include <string>

namespace cavitylz {

// Invalid or inconsistent user-facing configuration (bad JSON, unknown keys,
// out-of-range physical parameters supplied by the user).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical precondition of an operation was violated (normalizing a
// zero profile, arccos argument outside [-1, 1], nonpositive gap, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Root bracketing or polishing failed; carries the scanned interval.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), interval_lo(lo), interval_hi(hi) {}
  explicit SolverError(const std::string& what)
      : std::runtime_error(what), interval_lo(0.0), interval_hi(0.0) {}
  double interval_lo;
  double interval_hi;
};

// Adaptive integration failed (step size underflow, step budget exhausted);
// carries the last reachable time.
class IntegratorError : public std::runtime_error {
 public:
  IntegratorError(const std::string& what, double last_time)
      : std::runtime_error(what), last_reached(last_time) {}
  double last_reached;
};

// Least-squares extraction from spectra failed (degenerate sample set).
class FitError : public std::runtime_error {
 public:
  explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cavitylz
