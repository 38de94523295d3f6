#pragma once

#include <string_view>
#include <vector>

#include "tourn/pair_family.hpp"
#include "tourn/vertex_set.hpp"

namespace tourn {

enum class FamilyKind { pairing, quasi_pairing, neither };

std::string_view to_string(FamilyKind kind);

/// Union of all pairs.
VertexSet support(const PairFamily& family);

/// pairing iff |support| = 2|P|; quasi-pairing iff |support| = 2|P| - 1.
FamilyKind classify(const PairFamily& family);

/// Pairwise disjoint pairs: a perfect matching of its support.
class Pairing {
 public:
  /// Throws InputError unless `family` classifies as a pairing.
  explicit Pairing(PairFamily family);

  const PairFamily& family() const { return family_; }
  /// The other endpoint of the pair containing x. Throws if x is uncovered.
  Vertex partner(Vertex x) const;

 private:
  PairFamily family_;
  std::vector<Vertex> partner_;
};

/// Distinguished structure of a quasi-pairing: the shared vertex, its two
/// partners in increasing order, their union, and the partition obtained by
/// merging the two intersecting pairs.
struct QuasiAnatomy {
  Vertex v_hat = 0;
  Vertex v_minus = 0;
  Vertex v_plus = 0;
  VertexSet merged_block;
  Partition q_part;
};

/// A cover of an odd-size support by pairs in which exactly one vertex lies
/// in two pairs.
class QuasiPairing {
 public:
  /// Throws InputError unless `family` classifies as a quasi-pairing.
  explicit QuasiPairing(PairFamily family);

  const PairFamily& family() const { return family_; }
  const QuasiAnatomy& anatomy() const { return anatomy_; }

 private:
  PairFamily family_;
  QuasiAnatomy anatomy_;
};

inline Vertex partner(const Pairing& p, Vertex x) { return p.partner(x); }
inline const QuasiAnatomy& anatomy(const QuasiPairing& q) { return q.anatomy(); }

/// {y : {x, y} in family}; empty when x is uncovered.
VertexSet iota(const PairFamily& family, Vertex x);

/// Connected components of the graph (support, family), sorted.
Partition components(const PairFamily& family);

/// Contiguous runs of the ordered set `x` with 2 <= size < |x|, shortlex.
std::vector<VertexSet> nontrivial_intervals(const VertexSet& x);

/// No nontrivial interval of `x` is a union of blocks. Throws InputError if
/// `blocks` is not a partition of `x` into nonempty blocks.
bool is_irreducible_partition(const VertexSet& x, const Partition& blocks);

bool is_irreducible_pairing(const Pairing& p);
bool is_irreducible_quasi(const QuasiPairing& q);

/// Dispatches on classify(); throws InputError for "neither".
bool is_irreducible(const PairFamily& family);

}  // namespace tourn
