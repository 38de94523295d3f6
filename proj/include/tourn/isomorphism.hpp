#pragma once

#include <string>

#include "tourn/tournament.hpp"

namespace tourn {

inline constexpr int kPermutationScanGuard = 9;

/// Lexicographically least serialization (row-major pair bits) over all
/// relabelings of `t`. Equal forms iff isomorphic. n <= 9.
std::string canonical_form(const Tournament& t);

bool is_isomorphic(const Tournament& a, const Tournament& b);

}  // namespace tourn
