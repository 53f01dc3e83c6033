#pragma once

#include <stdexcept>
#include <string>

namespace crystal {

/// Raised when caller-supplied data violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quasi-minuscule (non-minuscule) tensor factor was supplied where only
/// minuscule factors are supported. Local moves for such factors are not
/// defined here; the corresponding agreement statement is only conjectural.
class UnsupportedFactor : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An internal invariant failed. This signals a bug (or a counterexample to
/// a theorem), never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] inline void invariant_failure(const std::string& what) {
  throw InvariantViolation(what);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) invariant_failure(what);
}

}  // namespace detail
}  // namespace crystal
