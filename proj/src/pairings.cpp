#include "tourn/pairings.hpp"

#include <algorithm>
#include <numeric>

#include "tourn/errors.hpp"

namespace tourn {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::pairing: return "pairing";
    case FamilyKind::quasi_pairing: return "quasi-pairing";
    case FamilyKind::neither: return "neither";
  }
  return "neither";
}

VertexSet support(const PairFamily& family) {
  std::vector<Vertex> all;
  all.reserve(2 * family.size());
  for (auto p : family.pairs()) {
    all.push_back(p.lo);
    all.push_back(p.hi);
  }
  return VertexSet(std::move(all));
}

FamilyKind classify(const PairFamily& family) {
  auto covered = support(family).size();
  if (covered == 2 * family.size()) return FamilyKind::pairing;
  if (covered + 1 == 2 * family.size()) return FamilyKind::quasi_pairing;
  return FamilyKind::neither;
}

Pairing::Pairing(PairFamily family)
    : family_(std::move(family)), partner_(static_cast<std::size_t>(family_.ambient()), -1) {
  if (classify(family_) != FamilyKind::pairing) {
    throw InputError("not a pairing: " + format_pairs(family_));
  }
  for (auto p : family_.pairs()) {
    partner_[static_cast<std::size_t>(p.lo)] = p.hi;
    partner_[static_cast<std::size_t>(p.hi)] = p.lo;
  }
}

Vertex Pairing::partner(Vertex x) const {
  if (x < 0 || x >= family_.ambient() || partner_[static_cast<std::size_t>(x)] < 0) {
    throw InputError("vertex " + std::to_string(x) + " is not covered by " +
                     format_pairs(family_));
  }
  return partner_[static_cast<std::size_t>(x)];
}

QuasiPairing::QuasiPairing(PairFamily family) : family_(std::move(family)) {
  if (classify(family_) != FamilyKind::quasi_pairing) {
    throw InputError("not a quasi-pairing: " + format_pairs(family_));
  }
  std::vector<int> degree(static_cast<std::size_t>(family_.ambient()), 0);
  for (auto p : family_.pairs()) {
    ++degree[static_cast<std::size_t>(p.lo)];
    ++degree[static_cast<std::size_t>(p.hi)];
  }
  auto hat = std::ranges::find(degree, 2);
  anatomy_.v_hat = static_cast<Vertex>(hat - degree.begin());
  auto partners = iota(family_, anatomy_.v_hat);
  anatomy_.v_minus = partners.front();
  anatomy_.v_plus = partners.back();
  anatomy_.merged_block = VertexSet{anatomy_.v_hat, anatomy_.v_minus, anatomy_.v_plus};
  anatomy_.q_part.push_back(anatomy_.merged_block);
  for (auto p : family_.pairs()) {
    if (p.lo != anatomy_.v_hat && p.hi != anatomy_.v_hat) anatomy_.q_part.push_back({p.lo, p.hi});
  }
  std::ranges::sort(anatomy_.q_part);
}

VertexSet iota(const PairFamily& family, Vertex x) {
  std::vector<Vertex> out;
  for (auto p : family.pairs()) {
    if (p.lo == x) out.push_back(p.hi);
    if (p.hi == x) out.push_back(p.lo);
  }
  return VertexSet(std::move(out));
}

Partition components(const PairFamily& family) {
  std::vector<Vertex> parent(static_cast<std::size_t>(family.ambient()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      auto& up = parent[static_cast<std::size_t>(v)];
      up = parent[static_cast<std::size_t>(up)];
      v = up;
    }
    return v;
  };
  for (auto p : family.pairs()) parent[static_cast<std::size_t>(find(p.hi))] = find(p.lo);

  std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(family.ambient()));
  for (Vertex v : support(family)) groups[static_cast<std::size_t>(find(v))].push_back(v);
  Partition out;
  for (auto& g : groups)
    if (!g.empty()) out.emplace_back(std::move(g));
  std::ranges::sort(out);
  return out;
}

std::vector<VertexSet> nontrivial_intervals(const VertexSet& x) {
  auto items = x.items();
  std::vector<VertexSet> out;
  for (std::size_t len = 2; len < items.size(); ++len) {
    for (std::size_t start = 0; start + len <= items.size(); ++start) {
      auto run = items.subspan(start, len);
      out.emplace_back(std::vector<Vertex>(run.begin(), run.end()));
    }
  }
  return out;
}

bool is_irreducible_partition(const VertexSet& x, const Partition& blocks) {
  const auto items = x.items();
  const std::size_t k = items.size();
  auto position = [&](Vertex v) {
    return static_cast<std::size_t>(std::ranges::lower_bound(items, v) - items.begin());
  };

  // Block extent in positions of x; also validates the partition.
  std::vector<std::size_t> owner(k, blocks.size());
  std::vector<std::pair<std::size_t, std::size_t>> extent;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InputError("partition has an empty block");
    for (Vertex v : blocks[b]) {
      if (!x.contains(v)) {
        throw InputError("block " + format_vertex_set(blocks[b]) + " leaves the ground set");
      }
      auto pos = position(v);
      if (owner[pos] != blocks.size()) {
        throw InputError("vertex " + std::to_string(v) + " lies in two blocks");
      }
      owner[pos] = b;
    }
    extent.emplace_back(position(blocks[b].front()), position(blocks[b].back()));
  }
  if (std::ranges::find(owner, blocks.size()) != owner.end()) {
    throw InputError("blocks do not cover " + format_vertex_set(x));
  }

  for (std::size_t len = 2; len < k; ++len) {
    for (std::size_t lo = 0; lo + len <= k; ++lo) {
      const std::size_t hi = lo + len;  // interval is positions [lo, hi)
      bool union_of_blocks = true;
      for (std::size_t p = lo; p < hi && union_of_blocks; ++p) {
        auto [first, last] = extent[owner[p]];
        union_of_blocks = first >= lo && last < hi;
      }
      if (union_of_blocks) return false;
    }
  }
  return true;
}

bool is_irreducible_pairing(const Pairing& p) {
  return is_irreducible_partition(support(p.family()), components(p.family()));
}

bool is_irreducible_quasi(const QuasiPairing& q) {
  return is_irreducible_partition(support(q.family()), q.anatomy().q_part);
}

bool is_irreducible(const PairFamily& family) {
  switch (classify(family)) {
    case FamilyKind::pairing: return is_irreducible_pairing(Pairing(family));
    case FamilyKind::quasi_pairing: return is_irreducible_quasi(QuasiPairing(family));
    case FamilyKind::neither: break;
  }
  throw InputError("neither a pairing nor a quasi-pairing: " + format_pairs(family));
}

}  // namespace tourn
