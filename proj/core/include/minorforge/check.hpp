#pragma once

#include <stdexcept>
#include <string>

namespace minorforge {

// For invariants the algorithms guarantee by construction. These stay active
// in release builds: a failure means a bug in this library, and the message
// says so. User-facing precondition checks throw std::invalid_argument
// instead and are phrased at the call site.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw std::logic_error("internal invariant violated: " + what);
}

}  // namespace minorforge
