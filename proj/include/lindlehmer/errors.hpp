#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lindlehmer {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad group orders, mismatched dimensions, violated preconditions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Polynomial text that does not match the grammar. `position` is a 0-based byte offset.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidArgument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured cap (group order, search budget, precision ladder) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check disagreed. Always indicates a bug, never bad input.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

/// The inverse character transform did not land in the integers.
class NonIntegralResult : public Error {
 public:
  using Error::Error;
};

}  // namespace lindlehmer
