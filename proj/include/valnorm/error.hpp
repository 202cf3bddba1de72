#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace valnorm {

enum class ErrorKind {
  io,          // unreadable or missing files
  parse,       // malformed file content (carries 1-based line/row numbers)
  validation,  // contract violations: bad sizes, bad configuration
  degenerate,  // zero-variance denominators and the like
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  static Error io(std::string m) { return {ErrorKind::io, std::move(m)}; }
  static Error parse(std::string m) { return {ErrorKind::parse, std::move(m)}; }
  static Error validation(std::string m) { return {ErrorKind::validation, std::move(m)}; }
  static Error degenerate(std::string m) { return {ErrorKind::degenerate, std::move(m)}; }

 private:
  ErrorKind kind_;
};

}  // namespace valnorm
