#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fairdsg {

// Base of everything the library throws on a violated precondition or bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed external data (GML, JSON lines, edge lists). `line` is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fairdsg
