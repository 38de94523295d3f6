#include "tourn/modules.hpp"

#include <algorithm>
#include <cstdint>

namespace tourn {

namespace {

void require_within(const Tournament& t, const VertexSet& s, std::string_view what) {
  if (!s.within(t.order())) {
    throw InputError(std::string(what) + ": vertex " + std::to_string(s.back()) +
                     " outside 0.." + std::to_string(t.order() - 1));
  }
}

bool splits(const Tournament& t, Vertex v, const std::vector<Vertex>& members) {
  bool ref = t.arc(v, members.front());
  for (std::size_t k = 1; k < members.size(); ++k)
    if (t.arc(v, members[k]) != ref) return true;
  return false;
}

}  // namespace

bool is_module(const Tournament& t, const VertexSet& m) {
  require_within(t, m, "is_module");
  if (m.size() <= 1) return true;
  std::vector<Vertex> members(m.begin(), m.end());
  for (Vertex v = 0; v < t.order(); ++v)
    if (!m.contains(v) && splits(t, v, members)) return false;
  return true;
}

VertexSet module_closure(const Tournament& t, const VertexSet& seed) {
  require_within(t, seed, "module_closure");
  if (seed.size() < 2) throw InputError("module_closure: seed needs at least 2 vertices");
  std::vector<char> inside(static_cast<std::size_t>(t.order()), 0);
  std::vector<Vertex> members(seed.begin(), seed.end());
  for (Vertex v : members) inside[static_cast<std::size_t>(v)] = 1;

  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex v = 0; v < t.order(); ++v) {
      if (!inside[static_cast<std::size_t>(v)] && splits(t, v, members)) {
        inside[static_cast<std::size_t>(v)] = 1;
        members.push_back(v);
        grew = true;
      }
    }
  }
  return VertexSet(std::move(members));
}

VertexSet find_nontrivial_module(const Tournament& t) {
  const int n = t.order();
  if (n <= 2) return {};
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      auto closure = module_closure(t, {x, y});
      if (static_cast<int>(closure.size()) < n) return closure;
    }
  }
  return {};
}

bool is_indecomposable(const Tournament& t) { return find_nontrivial_module(t).empty(); }

std::vector<VertexSet> all_modules_bruteforce(const Tournament& t) {
  const int n = t.order();
  check_guard(n, kSubsetScanGuard, "all_modules_bruteforce");
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex x = 0; x < n; ++x)
      if (x != v && t.arc(v, x)) out[static_cast<std::size_t>(v)] |= std::uint32_t{1} << x;

  std::vector<VertexSet> modules;
  const std::uint32_t full = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
  for (std::uint32_t m = 0;; ++m) {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (m >> v & 1u) continue;
      auto seen = out[static_cast<std::size_t>(v)] & m;
      ok = seen == 0 || seen == m;
    }
    if (ok) modules.push_back(VertexSet::from_mask(m));
    if (m == full) break;
  }
  std::ranges::sort(modules, shortlex_less);
  return modules;
}

}  // namespace tourn
