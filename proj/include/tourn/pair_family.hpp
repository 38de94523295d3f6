#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tourn/vertex_set.hpp"

namespace tourn {

/// Unordered pair {lo, hi}, always stored with lo < hi.
struct Pair {
  Vertex lo = 0;
  Vertex hi = 0;

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// A set of unordered vertex pairs over the ambient range 0..ambient-1.
///
/// Pairs are normalized to lo < hi and kept sorted, so two families with
/// the same pairs compare equal regardless of construction order.
class PairFamily {
 public:
  PairFamily() = default;
  /// Throws InputError for loops, duplicates or endpoints outside the range.
  PairFamily(int ambient, std::vector<Pair> pairs);
  PairFamily(int ambient, std::initializer_list<std::pair<Vertex, Vertex>> pairs);

  int ambient() const { return ambient_; }
  std::span<const Pair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(Vertex a, Vertex b) const;

  /// Image under x -> ambient-1-x.
  PairFamily mirrored() const;

  friend bool operator==(const PairFamily&, const PairFamily&) = default;
  /// Lexicographic on the pair sequence; a proper prefix sorts first.
  friend auto operator<=>(const PairFamily& a, const PairFamily& b) {
    if (auto c = a.pairs_ <=> b.pairs_; c != 0) return c;
    return a.ambient_ <=> b.ambient_;
  }

 private:
  int ambient_ = 0;
  std::vector<Pair> pairs_;
};

/// "i-j,k-l" with tokens sorted; the empty family formats as "".
std::string format_pairs(const PairFamily& family);

/// Parses the format above. Tokens may come in any order but each must be
/// "i-j" with i < j. When `ambient` is negative it defaults to max vertex + 1.
PairFamily parse_pairs(std::string_view text, int ambient = -1);

}  // namespace tourn
