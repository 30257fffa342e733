#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bipglue {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. position is a byte offset into the parsed string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)),
        message_(what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

// Well-formed input that cannot be processed: universe mismatch, exceeded
// caps, invalid priority orders, unknown states.
class SemanticError : public Error {
 public:
  using Error::Error;
};

// An internal post-condition failed. Always a bug.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace bipglue
