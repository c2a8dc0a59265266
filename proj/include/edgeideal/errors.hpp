#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgeideal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid vertex, non-edge argument, malformed graph construction.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Mathematically undefined request (void complex, epsilon with isolated vertices, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured cutoff or search budget was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what, const std::string& source = {})
      : Error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " + what),
        line_(line),
        detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

}  // namespace edgeideal
