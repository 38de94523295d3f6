#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tourn/errors.hpp"
#include "tourn/pair_family.hpp"
#include "tourn/vertex_set.hpp"

namespace tourn {

/// Finite tournament on vertices 0..n-1.
///
/// Only the orientation of each pair i < j is stored (one bit, row-major
/// over pairs). arc(y, x) is the complement of arc(x, y), so a stored
/// value is always complete and asymmetric.
class Tournament {
 public:
  Tournament() = default;

  /// Builds a tournament from `up(i, j)`, called once for every i < j and
  /// returning whether the arc is i -> j.
  template <class UpperArc>
  static Tournament from_relation(int n, UpperArc&& up) {
    Tournament t(n);
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (up(i, j)) t.set_bit(t.index(i, j));
    return t;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(0, n_); }

  /// Whether (x, y) is an arc. Requires x != y, both in range.
  bool arc(Vertex x, Vertex y) const {
    return x < y ? test_bit(index(x, y)) : !test_bit(index(y, x));
  }

  /// Out-degree of every vertex.
  std::vector<int> scores() const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  explicit Tournament(int n);

  std::size_t index(Vertex i, Vertex j) const {
    auto ui = static_cast<std::size_t>(i), un = static_cast<std::size_t>(n_);
    return ui * un - ui * (ui + 1) / 2 + static_cast<std::size_t>(j - i - 1);
  }
  bool test_bit(std::size_t k) const { return (bits_[k >> 6] >> (k & 63)) & 1u; }
  void set_bit(std::size_t k) { bits_[k >> 6] |= std::uint64_t{1} << (k & 63); }

  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// The total order on 0..n-1: arc x -> y iff x < y.
Tournament transitive(int n);

/// Reverses every arc whose endpoint pair is in `pairs`.
Tournament reverse_pairs(const Tournament& t, const PairFamily& pairs);

/// Every arc reversed.
Tournament dual(const Tournament& t);

/// The tournament obtained from `base` transitive order by reversing `pairs`.
inline Tournament inv(int n, const PairFamily& pairs) {
  return reverse_pairs(transitive(n), pairs);
}

struct InducedTournament {
  Tournament tournament;
  /// rank_map[i] is the original vertex relabeled to i.
  std::vector<Vertex> rank_map;
};

/// Subtournament induced by `subset`, relabeled by rank.
InducedTournament subtournament(const Tournament& t, const VertexSet& subset);

/// T - v, relabeled by rank.
Tournament remove_vertex(const Tournament& t, Vertex v);

/// The tournament S with S(i, j) = T(perm[i], perm[j]).
Tournament relabel(const Tournament& t, std::span<const Vertex> perm);

/// Two-line text form: the decimal order, then one '0'/'1' per pair i < j in
/// row-major order ('1' iff i -> j). Each line ends with '\n'.
std::string format_tournament(const Tournament& t);
Tournament parse_tournament(std::string_view text);

/// Graphviz digraph, one edge per arc, vertices labeled 0..n-1.
std::string to_dot(const Tournament& t);

}  // namespace tourn
