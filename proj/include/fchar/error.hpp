#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fchar {

/// Input violates an operation's precondition (bad ring, bad ideal, bad
/// semigroup, ...). The CLI maps it to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in polynomial text. `position` is a 0-based byte offset.
class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : PreconditionError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured resource cap was hit. Never a wrong answer: the
/// computation is abandoned. The CLI maps it to exit code 3.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent exceeded the per-variable cap.
class ExponentOverflow : public ResourceCapError {
 public:
  using ResourceCapError::ResourceCapError;
};

}  // namespace fchar
