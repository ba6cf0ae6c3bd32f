#pragma once

#include <stdexcept>
#include <string>

namespace kint {

// Caller supplied something outside an operation's domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical guarantee failed on a concrete instance. The CLI maps this
// to exit status 2; it must never be swallowed.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidInput(what);
}

}  // namespace kint
