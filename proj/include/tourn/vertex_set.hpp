#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tourn {

using Vertex = int;

/// Finite set of vertices, stored sorted without duplicates.
///
/// The ambient vertex range is not stored; operations that take a
/// tournament validate membership against its order.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> items);
  explicit VertexSet(std::vector<Vertex> items);

  /// The integer interval [first, last).
  static VertexSet range(Vertex first, Vertex last);
  /// Bit i of `mask` set means vertex i is a member.
  static VertexSet from_mask(std::uint64_t mask);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  Vertex front() const { return items_.front(); }
  Vertex back() const { return items_.back(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  std::span<const Vertex> items() const { return items_; }

  bool contains(Vertex v) const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  /// True when every member lies in 0..n-1.
  bool within(int n) const;
  /// 0..n-1 minus this set.
  VertexSet complement(int n) const;
  /// Requires every member < 64.
  std::uint64_t mask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Plain lexicographic order on the sorted element sequence.
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.items_ <=> b.items_;
  }

 private:
  std::vector<Vertex> items_;
};

/// Size first, then lexicographic. Used for module and co-module listings.
bool shortlex_less(const VertexSet& a, const VertexSet& b);

using Partition = std::vector<VertexSet>;

/// "{a,b,c}" with ascending elements; "{}" for the empty set.
std::string format_vertex_set(const VertexSet& set);
/// Accepts the format above, with optional whitespace around tokens.
VertexSet parse_vertex_set(std::string_view text);

}  // namespace tourn
