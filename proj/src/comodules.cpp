#include "tourn/comodules.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "tourn/modules.hpp"
#include "tourn/pairings.hpp"

namespace tourn {

namespace {

bool is_nontrivial_module(const Tournament& t, const VertexSet& m) {
  return !is_trivial_module(t, m) && is_module(t, m);
}

/// is_module for every subset of 0..n-1, indexed by bitmask.
std::vector<char> module_table(const Tournament& t) {
  const int n = t.order();
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex x = 0; x < n; ++x)
      if (x != v && t.arc(v, x)) out[static_cast<std::size_t>(v)] |= std::uint32_t{1} << x;
  std::vector<char> table(std::size_t{1} << n, 0);
  for (std::uint32_t m = 0; m < table.size(); ++m) {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (m >> v & 1u) continue;
      auto seen = out[static_cast<std::size_t>(v)] & m;
      ok = seen == 0 || seen == m;
    }
    table[m] = ok;
  }
  return table;
}

/// Co-module flag for every subset, indexed by bitmask.
std::vector<char> comodule_table(const Tournament& t) {
  const int n = t.order();
  auto modules = module_table(t);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  auto nontrivial = [&](std::uint32_t m) {
    auto size = std::popcount(m);
    return size >= 2 && size < n && modules[m];
  };
  std::vector<char> table(modules.size(), 0);
  for (std::uint32_t m = 0; m < table.size(); ++m) table[m] = nontrivial(m) || nontrivial(full ^ m);
  return table;
}

}  // namespace

void ComoduleFamily::normalize() {
  std::ranges::sort(members, shortlex_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

std::string format_family(const ComoduleFamily& family) {
  std::string out;
  for (const auto& m : family.members) {
    if (!out.empty()) out += ';';
    out += format_vertex_set(m);
  }
  return out;
}

bool is_comodule(const Tournament& t, const VertexSet& m) {
  if (!m.within(t.order())) {
    throw InputError("is_comodule: vertex " + std::to_string(m.back()) + " outside 0.." +
                     std::to_string(t.order() - 1));
  }
  return is_nontrivial_module(t, m) || is_nontrivial_module(t, m.complement(t.order()));
}

ComoduleFamily minimal_comodules_bruteforce(const Tournament& t) {
  check_guard(t.order(), kComoduleScanGuard, "minimal_comodules_bruteforce");
  auto comodule = comodule_table(t);
  ComoduleFamily out;
  for (std::uint32_t m = 1; m < comodule.size(); ++m) {
    if (!comodule[m]) continue;
    bool minimal = true;
    for (std::uint32_t s = (m - 1) & m; s != 0 && minimal; s = (s - 1) & m) minimal = !comodule[s];
    if (minimal) out.members.push_back(VertexSet::from_mask(m));
  }
  out.normalize();
  return out;
}

ComoduleFamily mc_total_order(int n) {
  if (n < 3) throw InputError("mc_total_order: n = " + std::to_string(n) + " is below 3");
  ComoduleFamily out;
  out.members.push_back({0});
  out.members.push_back({n - 1});
  for (Vertex i = 1; i <= n - 3; ++i) out.members.push_back({i, i + 1});
  out.normalize();
  return out;
}

ComoduleFamily minimal_comodules_of_order(int n) {
  return n >= 3 ? mc_total_order(n) : ComoduleFamily{};
}

int delta_total_order(int n) {
  if (n < 3) throw InputError("delta_total_order: n = " + std::to_string(n) + " is below 3");
  return (n + 2) / 2;
}

ComoduleFamily max_comodular_decomposition_bruteforce(const Tournament& t) {
  const int n = t.order();
  check_guard(n, kDecompositionGuard, "max_comodular_decomposition_bruteforce");
  auto comodule = comodule_table(t);
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t m = 1; m < comodule.size(); ++m)
    if (comodule[m]) candidates.push_back(m);

  // best[used]: largest packing of co-modules avoiding `used`. The least
  // unused vertex is either left uncovered or is the least element of the
  // next co-module, so each packing is reached along one path.
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<int> best(std::size_t{1} << n, -1);
  std::vector<std::uint32_t> choice(best.size(), 0);
  auto solve = [&](auto&& self, std::uint32_t used) -> int {
    if (used == full) return 0;
    auto& memo = best[used];
    if (memo >= 0) return memo;
    const std::uint32_t low = ~used & (used + 1);
    memo = self(self, used | low);
    choice[used] = 0;
    for (auto c : candidates) {
      if ((c & low) == 0 || (c & used) != 0) continue;
      int with = 1 + self(self, used | c);
      if (with > memo) {
        memo = with;
        choice[used] = c;
      }
    }
    return memo;
  };
  solve(solve, 0);

  ComoduleFamily out;
  for (std::uint32_t used = 0; used != full;) {
    if (auto c = choice[used]; c != 0) {
      out.members.push_back(VertexSet::from_mask(c));
      used |= c;
    } else {
      used |= ~used & (used + 1);
    }
  }
  out.normalize();
  return out;
}

bool is_transversal(const VertexSet& r, const ComoduleFamily& family) {
  return std::ranges::all_of(family.members, [&](const VertexSet& m) { return r.intersects(m); });
}

bool fact1_holds(int n, const PairFamily& family) {
  if (!is_indecomposable(inv(n, family))) return true;
  return is_transversal(support(family), minimal_comodules_of_order(n));
}

}  // namespace tourn
