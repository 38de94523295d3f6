#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tourn/pair_family.hpp"

namespace tourn {

/// One evaluated instance of a characterization: both sides plus the
/// named component conditions that fed them.
struct TheoremInstance {
  std::string check;  // "T1", "T2", "T3", "C1", "C2", "C3"
  int n = 0;
  PairFamily family;
  bool lhs = false;
  bool rhs = false;
  /// False when n is below the statement's size hypothesis.
  bool in_hypothesis = true;
  std::vector<std::pair<std::string, bool>> details;
};

struct VerificationReport {
  std::string theorem;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t checked = 0;
  std::vector<TheoremInstance> violations;
  /// Instances worth keeping that are not violations, e.g. the n = 5 cases
  /// where only one implication is claimed.
  std::vector<TheoremInstance> recorded;
  /// Named counts collected on the way (census identities).
  std::vector<std::pair<std::string, std::uint64_t>> tallies;
  double ms = 0.0;

  bool passed() const { return violations.empty(); }
};

struct Sides {
  bool lhs = false;
  bool rhs = false;
};

/// Partial pairing P of 0..n-1. lhs: Inv(n, P) indecomposable. rhs: P is
/// an irreducible pairing of a transversal of mc(n).
Sides theorem1_sides(int n, const PairFamily& pairing);

/// Partial quasi-pairing Q of 0..n-1. lhs: Q irreducible and its support a
/// transversal of mc(n). rhs: one of T, T - v-, T - v+ indecomposable.
Sides theorem2_sides(int n, const PairFamily& quasi);

struct Conditions {
  bool c1 = false;
  bool c2 = false;
  bool c3 = false;
  bool c4 = false;

  bool all() const { return c1 && c2 && c3 && c4; }
};

/// The four conditions characterizing indecomposable Inv(n, Q).
Conditions theorem3_conditions(int n, const PairFamily& quasi);

TheoremInstance theorem1_check(int n, const PairFamily& pairing);
TheoremInstance theorem2_check(int n, const PairFamily& quasi);
TheoremInstance theorem3_check(int n, const PairFamily& quasi);

/// Whether the instance contradicts the statement. Instances outside the
/// size hypothesis never do; at n = 5 Theorem 2 only asserts rhs => lhs.
bool is_violation(const TheoremInstance& inst);

struct VerifyOptions {
  int jobs = 1;
  /// Overrides the enumeration guard when set.
  std::optional<int> max_n;
};

/// Checks theorem 1, 2 or 3 on every partial (quasi-)pairing for n in
/// [n_min, n_max]. Throws InputError for an unknown theorem id.
VerificationReport verify_range(int theorem, int n_min, int n_max,
                                const VerifyOptions& options = {});

/// The three corollaries on full (quasi-)pairings of 0..n-1 for every n
/// in range where they apply: pairings at even n >= 6, quasi-pairings at
/// odd n >= 7 (Corollary 2) and odd n >= 5 (Corollary 3).
VerificationReport corollary_checks(int n_min, int n_max, const VerifyOptions& options = {});
inline VerificationReport corollary_checks(int n) { return corollary_checks(n, n); }

}  // namespace tourn
