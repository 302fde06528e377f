#pragma once

#include <stdexcept>
#include <string>

namespace seqopt {

/// Thrown when an enumeration or summation would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed external input (graph file, table text, config, CSV).
/// line() is 1-based; 0 when no line position applies.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A vector quantity (label, bound, weight row) has the wrong number of components.
class ArityMismatch : public std::invalid_argument {
 public:
  explicit ArityMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace seqopt
