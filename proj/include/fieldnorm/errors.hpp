#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fieldnorm {

/// Raised when a symbol table, lexicon or option set is unusable.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the corpus reader; carries the 1-based line that failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when a document violates a format invariant and cannot be written.
class SerializationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fieldnorm
