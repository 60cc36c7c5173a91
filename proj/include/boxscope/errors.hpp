#pragma once

#include <stdexcept>
#include <string>

namespace boxscope {

// Exit-code contract of the CLI: 2 validation, 3 resource cap, 1 internal.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the inputs was violated (bad argument, domain error).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The request exceeds a configured resource cap (vertex cap, iteration cap,
// search cutoff). The message names the cap that would be required.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed; signals a bug, not a user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

inline void internal_check(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace boxscope
