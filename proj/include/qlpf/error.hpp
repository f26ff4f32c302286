#pragma once

#include <stdexcept>
#include <string>

namespace qlpf {

/// Caller violated a precondition (bad shapes, zero scalars, isotropic input where
/// an anisotropic form is required, mismatched fields).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division by zero and similar arithmetic failures.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The degree guard tripped.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A self-check failed: two computation routes disagree, or a witness does not
/// reproduce its claimed value.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

inline void verify(bool cond, const std::string& what) {
  if (!cond) throw VerificationError(what);
}

}  // namespace qlpf
