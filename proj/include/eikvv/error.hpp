#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eikvv {

/// Argument outside the domain an operation is defined on (radius outside [0,1],
/// epsilon outside the supported range, grids that do not span the interval, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed potential or candidate input. `line()` is 1-based, 0 when the
/// problem is not tied to a single line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace eikvv
