// Error types shared by the whole engine.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcx {

// Invalid indices, shape mismatches, violated operation preconditions.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax or schema errors in textual input; position is a byte offset into
// the offending document.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fcx
