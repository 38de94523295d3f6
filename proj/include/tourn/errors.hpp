#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tourn {

/// Malformed caller input: out-of-range vertex, bad token, wrong family shape.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force size guard was exceeded. Raised instead of starting a scan
/// that would not finish in reasonable time.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline void check_guard(int n, int limit, std::string_view what) {
  if (n > limit) {
    throw GuardError(std::string(what) + ": size " + std::to_string(n) +
                     " exceeds guard " + std::to_string(limit));
  }
}

}  // namespace tourn
