#include "tourn/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace tourn {

std::string canonical_form(const Tournament& t) {
  const int n = t.order();
  check_guard(n, kPermutationScanGuard, "canonical_form");
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const std::size_t len = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  std::string best;
  std::string cur(len, '0');
  // Writes the relabeled bits into `cur`, giving up at the first position
  // where the relabeling is already worse than `best`.
  auto improves = [&] {
    bool tied = !best.empty();
    std::size_t k = 0;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j, ++k) {
        char c = t.arc(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? '1' : '0';
        if (tied) {
          if (c > best[k]) return false;
          if (c < best[k]) tied = false;
        }
        cur[k] = c;
      }
    }
    return !tied;
  };
  do {
    if (improves()) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_isomorphic(const Tournament& a, const Tournament& b) {
  if (a.order() != b.order()) return false;
  auto sa = a.scores(), sb = b.scores();
  std::ranges::sort(sa);
  std::ranges::sort(sb);
  if (sa != sb) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace tourn
