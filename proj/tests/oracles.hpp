#pragma once

// Test-only reference computations. Everything here works from the
// definitions on plain matrices and bitmasks and shares no code with the
// library beyond the PairFamily value type used to feed results back.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tourn/pair_family.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;  // m[x][y] = 1 iff x -> y

inline Matrix inv_matrix(int n, const std::vector<std::pair<int, int>>& pairs) {
  Matrix m(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) m[x][y] = 1;
  for (auto [a, b] : pairs) {
    m[a][b] ^= 1;
    m[b][a] ^= 1;
  }
  return m;
}

inline bool is_module(const Matrix& m, std::uint32_t set) {
  const int n = static_cast<int>(m.size());
  for (int v = 0; v < n; ++v) {
    if (set >> v & 1u) continue;
    int seen = -1;
    for (int x = 0; x < n; ++x) {
      if (!(set >> x & 1u)) continue;
      if (seen == -1) seen = m[v][x];
      else if (seen != m[v][x]) return false;
    }
  }
  return true;
}

inline bool indecomposable(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int k = std::popcount(s);
    if (k >= 2 && k < n && is_module(m, s)) return false;
  }
  return true;
}

inline std::string canonical(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += m[p[i]][p[j]] ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

/// Irreducibility by scanning unions of blocks: a nonempty union of some
/// blocks that is a nontrivial run of the ordered ground set makes the
/// partition reducible.
inline bool irreducible(const std::vector<int>& ground, const std::vector<std::vector<int>>& blocks) {
  const int k = static_cast<int>(ground.size());
  const int b = static_cast<int>(blocks.size());
  for (std::uint32_t pick = 1; pick < (1u << b); ++pick) {
    std::vector<int> uni;
    for (int i = 0; i < b; ++i)
      if (pick >> i & 1u) uni.insert(uni.end(), blocks[i].begin(), blocks[i].end());
    int size = static_cast<int>(uni.size());
    if (size < 2 || size >= k) continue;
    std::vector<int> pos;
    for (int v : uni) pos.push_back(static_cast<int>(std::find(ground.begin(), ground.end(), v) - ground.begin()));
    std::sort(pos.begin(), pos.end());
    if (pos.back() - pos.front() + 1 == size) return false;
  }
  return true;
}

/// Degree-constrained pair subsets of 0..n-1, found by scanning every
/// subset of the n(n-1)/2 pairs. quasi: exactly one vertex of degree 2;
/// otherwise all degrees <= 1. full: every vertex covered.
inline std::vector<tourn::PairFamily> families(int n, bool quasi, bool full, bool include_empty) {
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  std::vector<tourn::PairFamily> out;
  const std::uint64_t subsets = std::uint64_t{1} << all.size();
  for (std::uint64_t s = 0; s < subsets; ++s) {
    std::vector<int> deg(n, 0);
    std::vector<tourn::Pair> chosen;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!(s >> i & 1u)) continue;
      ++deg[all[i].first];
      ++deg[all[i].second];
      chosen.push_back({all[i].first, all[i].second});
    }
    int twos = 0, zeros = 0, big = 0;
    for (int d : deg) {
      twos += d == 2;
      zeros += d == 0;
      big += d > 2;
    }
    if (big > 0 || twos != (quasi ? 1 : 0)) continue;
    if (full && zeros > 0) continue;
    if (!quasi && chosen.empty() && !include_empty) continue;
    out.emplace_back(n, std::move(chosen));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Involutions of an n-set: I(n) = I(n-1) + (n-1) I(n-2).
inline std::uint64_t involutions(int n) {
  std::uint64_t a = 1, b = 1;  // I(0), I(1)
  if (n == 0) return 1;
  for (int k = 2; k <= n; ++k) {
    std::uint64_t c = b + static_cast<std::uint64_t>(k - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

inline std::vector<std::pair<int, int>> as_pairs(const tourn::PairFamily& f) {
  std::vector<std::pair<int, int>> out;
  for (auto p : f.pairs()) out.emplace_back(p.lo, p.hi);
  return out;
}

}  // namespace oracle
