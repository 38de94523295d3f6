#pragma once

#include <vector>

#include "tourn/tournament.hpp"

namespace tourn {

inline constexpr int kSubsetScanGuard = 20;

/// True iff every vertex outside `m` sees all of `m` the same way.
bool is_module(const Tournament& t, const VertexSet& m);

/// Smallest module containing `seed`.
///
/// Repeatedly absorbs the least outside vertex that distinguishes two
/// members of the current set. Requires |seed| >= 2.
VertexSet module_closure(const Tournament& t, const VertexSet& seed);

/// Only trivial modules (empty, singletons, everything). Tournaments of
/// order at most 2 are indecomposable.
bool is_indecomposable(const Tournament& t);

/// A nontrivial module if one exists, otherwise an empty set.
VertexSet find_nontrivial_module(const Tournament& t);

/// Every module, shortlex ordered. Scans all 2^n subsets; n <= 20.
std::vector<VertexSet> all_modules_bruteforce(const Tournament& t);

/// Trivial: empty, a singleton, or the whole vertex set.
inline bool is_trivial_module(const Tournament& t, const VertexSet& m) {
  return m.size() <= 1 || static_cast<int>(m.size()) == t.order();
}

}  // namespace tourn
