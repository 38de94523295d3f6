#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "tourn/pair_family.hpp"
#include "tourn/tournament.hpp"

namespace tourn {

enum class EnumKind { pairing, partial_pairing, quasi, partial_quasi };
enum class EnumFilter { all, irreducible_only, indecomposable_inv_only };

inline constexpr int kPartialEnumGuard = 12;
inline constexpr int kFullEnumGuard = 14;

std::string_view to_string(EnumKind kind);
std::string_view to_string(EnumFilter filter);
/// Throws InputError for names outside the closed vocabulary.
EnumKind parse_kind(std::string_view name);
EnumFilter parse_filter(std::string_view name);

inline bool is_quasi_kind(EnumKind k) {
  return k == EnumKind::quasi || k == EnumKind::partial_quasi;
}
inline bool is_partial_kind(EnumKind k) {
  return k == EnumKind::partial_pairing || k == EnumKind::partial_quasi;
}

struct EnumSpec {
  int n = 0;
  EnumKind kind = EnumKind::pairing;
  EnumFilter filter = EnumFilter::all;
  /// Emit the empty family for pairing kinds.
  bool include_empty = false;
  /// Overrides the default size guard when set.
  std::optional<int> max_n;
};

int guard_for(const EnumSpec& spec);

/// Visitor returns false to stop early.
using FamilyVisitor = std::function<bool(const PairFamily&)>;

inline constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

/// Streams every family matching `spec` in lexicographic order, skipping
/// the first `first_rank` matches and stopping after `count`. Concatenated
/// shards reproduce the unsharded stream exactly.
void for_each_family(const EnumSpec& spec, const FamilyVisitor& visit,
                     std::uint64_t first_rank = 0, std::uint64_t count = kUnbounded);

std::vector<PairFamily> enumerate(const EnumSpec& spec, std::uint64_t first_rank = 0,
                                  std::uint64_t count = kUnbounded);

std::uint64_t count_families(const EnumSpec& spec);

/// Irreducible pairings of {0..m-1}. m even, m <= 14.
std::uint64_t count_irreducible_pairings(int m);

/// Whether the family passes `filter` under its kind.
bool passes_filter(int n, const PairFamily& family, EnumFilter filter);

struct CensusEntry {
  PairFamily family;
  Tournament tournament;
  bool irreducible = false;
  /// Isomorphism class, numbered by first occurrence. Empty above the
  /// permutation-scan guard.
  std::optional<int> class_id;
};

/// Every family of `spec` whose Inv is indecomposable (its filter is
/// ignored). Throws std::logic_error if two families produce the same
/// tournament.
std::vector<CensusEntry> indecomposable_census(const EnumSpec& spec, int jobs = 1);

}  // namespace tourn
