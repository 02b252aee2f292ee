#pragma once

#include <stdexcept>
#include <string>

namespace kmsatake {

// Bad user-supplied data: malformed GCM, weight of wrong dimension,
// non-dominant weight where dominance is required, unparsable input.
// CLI maps this to exit code 1.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A query that falls outside the requested (or supported) truncation
// window: multiplicity lookups beyond table depth, windows beyond the
// engine caps. CLI maps this to exit code 2.
struct WindowError : std::runtime_error {
  explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant: an inexact division in a recursion that
// must be exact, a cross-check between two formulas failing, overflow
// guards. Always a bug or a violated mathematical assumption; never
// silently ignored. CLI maps this to exit code 3.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

inline void input_check(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

}  // namespace kmsatake
