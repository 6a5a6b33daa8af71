#pragma once

#include <stdexcept>
#include <string>

namespace fuselab {

// Error taxonomy. The CLI maps these onto its exit codes:
//   RefusalError  -> 1  (a configured bound or a domain refusal, e.g. infinite dimension)
//   InputError    -> 2  (malformed or out-of-contract input)
//   InternalError -> 3  (a broken invariant; always a bug, never silent)
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RefusalError : Error {
  using Error::Error;
};

struct InputError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalError("invariant violated: " + what);
}

inline void input_check(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

}  // namespace fuselab
