#pragma once

#include <stdexcept>

namespace fullproj {

// Raised when a brute-force or inclusion-exclusion computation would exceed
// its configured size bound. Callers may retry with a higher limit.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fullproj
