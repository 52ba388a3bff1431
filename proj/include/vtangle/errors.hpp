#pragma once

#include <stdexcept>
#include <string>

namespace vtangle {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct BoundaryMismatch : Error {
  explicit BoundaryMismatch(const std::string& msg) : Error(msg) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Raised by the text front ends; carries a 1-based source position.
struct SyntaxError : Error {
  int line;
  int column;
  SyntaxError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

struct PairingError : Error {
  explicit PairingError(const std::string& msg) : Error(msg) {}
};

struct NotStrictError : Error {
  explicit NotStrictError(const std::string& msg) : Error(msg) {}
};

struct NotClosedError : Error {
  explicit NotClosedError(const std::string& msg) : Error(msg) {}
};

struct InvalidLocationError : Error {
  explicit InvalidLocationError(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

}  // namespace vtangle
