#include "doctest.h"
#include "oracles.hpp"

#include "tourn/enumeration.hpp"
#include "tourn/pairings.hpp"

using namespace tourn;

namespace {

PairFamily fam(std::string_view text) { return parse_pairs(text); }

std::vector<std::vector<int>> blocks_of(const Partition& p) {
  std::vector<std::vector<int>> out;
  for (const auto& b : p) out.emplace_back(b.begin(), b.end());
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("pairings");

TEST_CASE("pair family text format") {
  auto f = parse_pairs("1-4,0-2");
  CHECK(format_pairs(f) == "0-2,1-4");
  CHECK(f.ambient() == 5);
  CHECK(format_pairs(PairFamily{}) == "");
  CHECK(parse_pairs("").empty());
  CHECK(parse_pairs("0-2", 9).ambient() == 9);

  CHECK_THROWS_AS(parse_pairs("2-0"), InputError);
  CHECK_THROWS_AS(parse_pairs("0-0"), InputError);
  CHECK_THROWS_AS(parse_pairs("0-2,"), InputError);
  CHECK_THROWS_AS(parse_pairs("0-2,0-2"), InputError);
  CHECK_THROWS_AS(parse_pairs("a-b"), InputError);
  CHECK_THROWS_AS(parse_pairs("0-2", 2), InputError);
  CHECK_THROWS_AS(parse_pairs("1--2"), InputError);
}

TEST_CASE("support") {
  CHECK(support(fam("0-2,1-4")) == VertexSet{0, 1, 2, 4});
  CHECK(support(PairFamily{}).empty());
  CHECK(support(fam("0-2,2-4,1-3")) == VertexSet{0, 1, 2, 3, 4});
}

TEST_CASE("classify") {
  CHECK(classify(fam("0-2,1-4")) == FamilyKind::pairing);
  CHECK(classify(fam("0-2,2-4,1-3")) == FamilyKind::quasi_pairing);
  CHECK(classify(fam("0-1,0-2,0-3")) == FamilyKind::neither);
  CHECK(classify(PairFamily{}) == FamilyKind::pairing);
  CHECK(classify(fam("0-1,1-2,0-2")) == FamilyKind::neither);
}

TEST_CASE("partner") {
  Pairing p(fam("0-2,1-4"));
  CHECK(p.partner(2) == 0);
  CHECK(p.partner(4) == 1);
  for (Vertex x : support(p.family())) {
    CHECK(p.partner(p.partner(x)) == x);
    CHECK(p.partner(x) != x);
  }
  CHECK_THROWS_AS(p.partner(3), InputError);
  CHECK_THROWS_AS(Pairing(fam("0-1,1-2")), InputError);
}

TEST_CASE("anatomy") {
  QuasiPairing q(fam("0-2,2-4,1-3"));
  CHECK(q.anatomy().v_hat == 2);
  CHECK(q.anatomy().v_minus == 0);
  CHECK(q.anatomy().v_plus == 4);
  CHECK(q.anatomy().merged_block == VertexSet{0, 2, 4});
  CHECK(q.anatomy().q_part == Partition{{0, 2, 4}, {1, 3}});

  QuasiPairing small(fam("0-1,1-2"));
  CHECK(small.anatomy().v_hat == 1);
  CHECK(small.anatomy().v_minus == 0);
  CHECK(small.anatomy().v_plus == 2);

  QuasiPairing edge(fam("0-2,0-4,1-3"));
  CHECK(edge.anatomy().v_hat == 0);
  CHECK(edge.anatomy().v_minus == 2);
  CHECK(edge.anatomy().v_plus == 4);
  CHECK(edge.anatomy().q_part == Partition{{0, 2, 4}, {1, 3}});

  CHECK_THROWS_AS(QuasiPairing(fam("0-1,2-3")), InputError);
  CHECK_THROWS_AS(QuasiPairing(fam("0-1")), InputError);
}

TEST_CASE("iota") {
  auto q = fam("0-2,2-4,1-3");
  CHECK(iota(q, 2) == VertexSet{0, 4});
  CHECK(iota(q, 1) == VertexSet{3});
  CHECK(iota(q, 5).empty());
}

TEST_CASE("components") {
  CHECK(components(fam("0-2,1-4")) == Partition{{0, 2}, {1, 4}});
  CHECK(components(fam("0-2,2-4,1-3")) == Partition{{0, 2, 4}, {1, 3}});
  CHECK(components(PairFamily{}).empty());
}

TEST_CASE("nontrivial_intervals") {
  std::vector<VertexSet> expected{{0, 1}, {1, 2}, {2, 4}, {0, 1, 2}, {1, 2, 4}};
  CHECK(nontrivial_intervals({0, 1, 2, 4}) == expected);
  CHECK(nontrivial_intervals({3, 8}).empty());
  CHECK(nontrivial_intervals({0, 1, 2}) == std::vector<VertexSet>{{0, 1}, {1, 2}});
}

TEST_CASE("is_irreducible_partition") {
  CHECK(is_irreducible_partition({0, 1, 2, 3}, {{0, 2}, {1, 3}}));
  CHECK_FALSE(is_irreducible_partition({0, 1, 2, 3}, {{0, 1}, {2, 3}}));
  CHECK(is_irreducible_partition({0, 4, 7}, {{0, 4, 7}}));
  CHECK(is_irreducible_partition({}, {}));

  CHECK_THROWS_AS(is_irreducible_partition({0, 1, 2}, {{0, 1}}), InputError);
  CHECK_THROWS_AS(is_irreducible_partition({0, 1, 2}, {{0, 1}, {1, 2}}), InputError);
  CHECK_THROWS_AS(is_irreducible_partition({0, 1, 2}, {{0, 1, 2}, {}}), InputError);
  CHECK_THROWS_AS(is_irreducible_partition({0, 1}, {{0, 1, 5}}), InputError);
}

TEST_CASE("is_irreducible_pairing") {
  CHECK(is_irreducible_pairing(Pairing(fam("0-2,1-3"))));
  CHECK_FALSE(is_irreducible_pairing(Pairing(fam("0-1,2-3"))));
  CHECK(is_irreducible_pairing(Pairing(fam("0-3,1-4,2-5"))));
  CHECK(is_irreducible_pairing(Pairing(PairFamily{})));
  // Interval tests use the order induced on the support.
  CHECK(is_irreducible_pairing(Pairing(fam("1-5,3-8"))));
  CHECK_FALSE(is_irreducible_pairing(Pairing(fam("1-3,5-8"))));
}

TEST_CASE("is_irreducible_quasi") {
  CHECK(is_irreducible_quasi(QuasiPairing(fam("0-2,2-4,1-3"))));
  CHECK_FALSE(is_irreducible_quasi(QuasiPairing(fam("0-1,1-2,3-4"))));
  CHECK_FALSE(is_irreducible_quasi(QuasiPairing(fam("0-2,1-2,3-4"))));
  CHECK_THROWS_AS(is_irreducible(fam("0-1,0-2,0-3")), InputError);
}

TEST_CASE("irreducibility agrees with the union-of-blocks oracle") {
  for (int n = 2; n <= 9; ++n) {
    for (auto kind : {EnumKind::partial_pairing, EnumKind::partial_quasi}) {
      if (is_quasi_kind(kind) && n < 3) continue;
      for (const auto& f : enumerate({.n = n, .kind = kind})) {
        auto cover = support(f);
        std::vector<int> ground(cover.begin(), cover.end());
        // Component blocks equal the pairs (pairings) or Q_part (quasi).
        auto parts = components(f);
        if (kind == EnumKind::partial_pairing) {
          CHECK(parts.size() == f.size());
        } else {
          CHECK(parts == QuasiPairing(f).anatomy().q_part);
        }
        REQUIRE(is_irreducible(f) == oracle::irreducible(ground, blocks_of(parts)));
      }
    }
  }
}

TEST_CASE("exactly one doubled vertex in every quasi-pairing") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& f : enumerate({.n = n, .kind = EnumKind::partial_quasi})) {
      int doubled = 0;
      for (Vertex v : support(f)) doubled += iota(f, v).size() == 2;
      CHECK(doubled == 1);
      CHECK(classify(f) == FamilyKind::quasi_pairing);
    }
  }
}

TEST_CASE("irreducibility is mirror invariant") {
  for (int n = 3; n <= 8; ++n) {
    for (auto kind : {EnumKind::partial_pairing, EnumKind::partial_quasi}) {
      for (const auto& f : enumerate({.n = n, .kind = kind})) {
        CHECK(is_irreducible(f) == is_irreducible(f.mirrored()));
      }
    }
  }
}

TEST_SUITE_END();
