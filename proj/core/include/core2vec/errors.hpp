#pragma once

#include <stdexcept>
#include <string>

namespace core2vec {

/// Malformed input file (bad line, wrong field count, non-numeric weight...).
/// Carries the 1-based line number when one is known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Structurally valid input that cannot be evaluated (all pairs OOV,
/// vocabulary mismatch between embedding and graph, ...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure during computation (non-finite loss, degenerate ranks).
class ComputeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace core2vec
