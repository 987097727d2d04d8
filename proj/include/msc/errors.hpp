#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msc {

/// Iterative eigensolver ran out of its iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, double last_residual)
      : std::runtime_error(msg), last_residual_(last_residual) {}

  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

/// Every slice spectrum is degenerate (lambda_max = 0), so the
/// similarity matrix is undefined.
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ".t3" input. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace msc
