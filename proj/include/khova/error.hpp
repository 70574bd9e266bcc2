#pragma once

#include <stdexcept>
#include <string>

namespace khova {

// Root of every exception thrown by the library. `kind()` is a stable
// machine-readable tag used by the CLI error output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Malformed text input (braid words, PD codes, polynomials, labels).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("parse", message) {}
};

// Structurally invalid diagram; the message lists every violation found.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message) : Error("validation", message) {}
};

// Exact division with a nonzero remainder.
class DivisionError : public Error {
 public:
  explicit DivisionError(const std::string& message) : Error("division", message) {}
};

// Input too large for the configured limits.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& message) : Error("resource", message) {}
};

// Violated internal invariant; always a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message) : Error("internal", message) {}
};

}  // namespace khova
