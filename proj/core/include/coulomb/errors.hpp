#pragma once

#include <stdexcept>
#include <string>

namespace coulomb {

// Mathematically invalid request on well-formed data: divergent series,
// mismatched algebras, non-dominant coweight, inexact sequence.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text.  line() is 1-based, 0 when no line is known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace coulomb
