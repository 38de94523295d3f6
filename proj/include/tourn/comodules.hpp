#pragma once

#include <string>
#include <vector>

#include "tourn/pair_family.hpp"
#include "tourn/tournament.hpp"

namespace tourn {

inline constexpr int kComoduleScanGuard = 14;
inline constexpr int kDecompositionGuard = 9;

/// A list of distinct vertex sets, kept in shortlex order.
struct ComoduleFamily {
  std::vector<VertexSet> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  void normalize();

  friend bool operator==(const ComoduleFamily&, const ComoduleFamily&) = default;
};

/// Members joined by ';', each as "{a,b}". Empty family formats as "".
std::string format_family(const ComoduleFamily& family);

/// M or its complement is a nontrivial module.
bool is_comodule(const Tournament& t, const VertexSet& m);

/// Co-modules containing no other co-module. n <= 14.
ComoduleFamily minimal_comodules_bruteforce(const Tournament& t);

/// Minimal co-modules of the total order on 0..n-1 by the closed formula:
/// the two end singletons and every inner adjacent pair {i, i+1},
/// 1 <= i <= n-3. Requires n >= 3.
ComoduleFamily mc_total_order(int n);

/// Maximum number of disjoint co-modules of the total order,
/// ceil((n+1)/2). Requires n >= 3.
int delta_total_order(int n);

/// A maximum family of pairwise disjoint co-modules, found by exact search.
/// n <= 9.
ComoduleFamily max_comodular_decomposition_bruteforce(const Tournament& t);

/// r meets every member of `family`; true for the empty family.
bool is_transversal(const VertexSet& r, const ComoduleFamily& family);

/// If Inv(n, P) is indecomposable then the support of P is a transversal of
/// the minimal co-modules of the total order. Returns the implication's
/// truth value.
bool fact1_holds(int n, const PairFamily& family);

/// mc of the total order for any n >= 0 (empty below 3).
ComoduleFamily minimal_comodules_of_order(int n);

}  // namespace tourn
