#include "tourn/enumeration.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "parallel.hpp"
#include "tourn/errors.hpp"
#include "tourn/isomorphism.hpp"
#include "tourn/modules.hpp"
#include "tourn/pairings.hpp"

namespace tourn {

std::string_view to_string(EnumKind kind) {
  switch (kind) {
    case EnumKind::pairing: return "pairing";
    case EnumKind::partial_pairing: return "partial-pairing";
    case EnumKind::quasi: return "quasi";
    case EnumKind::partial_quasi: return "partial-quasi";
  }
  return "pairing";
}

std::string_view to_string(EnumFilter filter) {
  switch (filter) {
    case EnumFilter::all: return "all";
    case EnumFilter::irreducible_only: return "irreducible-only";
    case EnumFilter::indecomposable_inv_only: return "indecomposable-inv-only";
  }
  return "all";
}

EnumKind parse_kind(std::string_view name) {
  for (auto k : {EnumKind::pairing, EnumKind::partial_pairing, EnumKind::quasi,
                 EnumKind::partial_quasi})
    if (to_string(k) == name) return k;
  throw InputError("unknown kind '" + std::string(name) +
                   "' (expected pairing, partial-pairing, quasi or partial-quasi)");
}

EnumFilter parse_filter(std::string_view name) {
  for (auto f : {EnumFilter::all, EnumFilter::irreducible_only, EnumFilter::indecomposable_inv_only})
    if (to_string(f) == name) return f;
  throw InputError("unknown filter '" + std::string(name) + "'");
}

int guard_for(const EnumSpec& spec) {
  if (spec.max_n) return *spec.max_n;
  return is_partial_kind(spec.kind) ? kPartialEnumGuard : kFullEnumGuard;
}

bool passes_filter(int n, const PairFamily& family, EnumFilter filter) {
  switch (filter) {
    case EnumFilter::all: return true;
    case EnumFilter::irreducible_only: return is_irreducible(family);
    case EnumFilter::indecomposable_inv_only: return is_indecomposable(inv(n, family));
  }
  return true;
}

namespace {

// Depth-first walk over families whose pairs are appended in strictly
// increasing order. Each node is a sorted family, visited before its
// extensions, so the walk is a preorder of the lexicographic trie.
class FamilyWalker {
 public:
  FamilyWalker(const EnumSpec& spec, const FamilyVisitor& visit, std::uint64_t first,
               std::uint64_t count)
      : spec_(spec),
        visit_(visit),
        first_(first),
        count_(count),
        quasi_(is_quasi_kind(spec.kind)),
        full_(!is_partial_kind(spec.kind)),
        degree_(static_cast<std::size_t>(spec.n), 0) {}

  void run() {
    if (count_ == 0) return;
    descend(Pair{0, 0}, true);
  }

 private:
  bool emittable() const {
    if (quasi_ ? doubled_ != 1 : doubled_ != 0) return false;
    if (full_ && covered_ != spec_.n) return false;
    if (!quasi_ && pairs_.empty() && !spec_.include_empty) return false;
    return true;
  }

  void emit() {
    PairFamily family(spec_.n, pairs_);
    if (!passes_filter(spec_.n, family, spec_.filter)) return;
    if (rank_++ < first_) return;
    if (!visit_(family) || ++emitted_ >= count_) stopped_ = true;
  }

  bool can_add(Vertex a, Vertex b) const {
    auto da = degree_[static_cast<std::size_t>(a)], db = degree_[static_cast<std::size_t>(b)];
    if (!quasi_) return da == 0 && db == 0;
    if (da >= 2 || db >= 2) return false;
    return doubled_ + (da == 1) + (db == 1) <= 1;
  }

  void add(Vertex a, Vertex b, int delta) {
    for (Vertex v : {a, b}) {
      auto& d = degree_[static_cast<std::size_t>(v)];
      if (delta > 0) {
        if (d == 0) ++covered_;
        if (d == 1) ++doubled_;
      } else {
        if (d == 2) --doubled_;
        if (d == 1) --covered_;
      }
      d += delta;
    }
  }

  Vertex least_uncovered() const {
    for (Vertex v = 0; v < spec_.n; ++v)
      if (degree_[static_cast<std::size_t>(v)] == 0) return v;
    return spec_.n;
  }

  void descend(Pair last, bool root) {
    if (emittable()) emit();
    if (stopped_) return;
    const int n = spec_.n;
    // A vertex below the next pair's least element can never be covered.
    const Vertex lo_cap = full_ ? least_uncovered() : n - 1;
    for (Vertex a = root ? 0 : last.lo; a <= lo_cap && a < n; ++a) {
      for (Vertex b = (!root && a == last.lo) ? last.hi + 1 : a + 1; b < n; ++b) {
        if (!can_add(a, b)) continue;
        add(a, b, +1);
        pairs_.push_back({a, b});
        descend({a, b}, false);
        pairs_.pop_back();
        add(a, b, -1);
        if (stopped_) return;
      }
    }
  }

  const EnumSpec& spec_;
  const FamilyVisitor& visit_;
  std::uint64_t first_;
  std::uint64_t count_;
  bool quasi_;
  bool full_;
  std::vector<int> degree_;
  std::vector<Pair> pairs_;
  int covered_ = 0;
  int doubled_ = 0;
  std::uint64_t rank_ = 0;
  std::uint64_t emitted_ = 0;
  bool stopped_ = false;
};

}  // namespace

void for_each_family(const EnumSpec& spec, const FamilyVisitor& visit, std::uint64_t first_rank,
                     std::uint64_t count) {
  if (spec.n < 0) throw InputError("enumerate: negative n " + std::to_string(spec.n));
  check_guard(spec.n, guard_for(spec), std::string("enumerate ") + std::string(to_string(spec.kind)));
  FamilyWalker(spec, visit, first_rank, count).run();
}

std::vector<PairFamily> enumerate(const EnumSpec& spec, std::uint64_t first_rank,
                                  std::uint64_t count) {
  std::vector<PairFamily> out;
  for_each_family(
      spec,
      [&](const PairFamily& f) {
        out.push_back(f);
        return true;
      },
      first_rank, count);
  return out;
}

std::uint64_t count_families(const EnumSpec& spec) {
  std::uint64_t total = 0;
  for_each_family(spec, [&](const PairFamily&) {
    ++total;
    return true;
  });
  return total;
}

std::uint64_t count_irreducible_pairings(int m) {
  if (m < 0 || m % 2 != 0) {
    throw InputError("count_irreducible_pairings: m = " + std::to_string(m) +
                     " is not a nonnegative even number");
  }
  check_guard(m, kFullEnumGuard, "count_irreducible_pairings");
  EnumSpec spec{.n = m, .kind = EnumKind::pairing, .filter = EnumFilter::irreducible_only,
                .include_empty = m == 0};
  return count_families(spec);
}

std::vector<CensusEntry> indecomposable_census(const EnumSpec& spec, int jobs) {
  const auto families = enumerate(spec);
  std::vector<std::optional<CensusEntry>> slots(families.size());
  std::vector<std::string> forms(families.size());
  const bool classify_iso = spec.n <= kPermutationScanGuard;

  detail::parallel_for(families.size(), jobs, [&](std::size_t i) {
    auto t = inv(spec.n, families[i]);
    if (!is_indecomposable(t)) return;
    if (classify_iso) forms[i] = canonical_form(t);
    slots[i] = CensusEntry{families[i], std::move(t), is_irreducible(families[i]), std::nullopt};
  });

  std::vector<CensusEntry> out;
  std::unordered_map<std::string, int> class_of;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) continue;
    auto& entry = *slots[i];
    if (!seen.insert(format_tournament(entry.tournament)).second) {
      throw std::logic_error("census: two families give the same tournament, second is " +
                             format_pairs(entry.family));
    }
    if (classify_iso) {
      auto [it, fresh] = class_of.try_emplace(forms[i], static_cast<int>(class_of.size()));
      entry.class_id = it->second;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace tourn
