#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace entcon {

/// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rational strings, config documents).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A staged construction could not be completed.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Invalid run or system configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Lookup of a point the construction never handled.
class NotHandledError : public Error {
 public:
  using Error::Error;
};

}  // namespace entcon
