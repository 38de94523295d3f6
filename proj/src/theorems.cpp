#include "tourn/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "parallel.hpp"
#include "tourn/comodules.hpp"
#include "tourn/enumeration.hpp"
#include "tourn/errors.hpp"
#include "tourn/modules.hpp"
#include "tourn/pairings.hpp"

namespace tourn {

namespace {

constexpr int kTheoremMinOrder = 5;

bool meets_mc(int n, const PairFamily& family) {
  return is_transversal(support(family), minimal_comodules_of_order(n));
}

bool detail_of(const TheoremInstance& inst, std::string_view name) {
  for (const auto& [key, value] : inst.details)
    if (key == name) return value;
  throw std::logic_error("instance has no detail '" + std::string(name) + "'");
}

struct QuasiVerdicts {
  bool irreducible;
  bool transversal;
  bool whole;
  bool without_minus;
  bool without_plus;
};

QuasiVerdicts quasi_verdicts(int n, const QuasiPairing& q) {
  const auto& a = q.anatomy();
  auto t = inv(n, q.family());
  return {is_irreducible_quasi(q), meets_mc(n, q.family()), is_indecomposable(t),
          is_indecomposable(remove_vertex(t, a.v_minus)),
          is_indecomposable(remove_vertex(t, a.v_plus))};
}

/// Adjacent-crossing rule: {v, v+2} and {v+1, v+3} both present forces the
/// shared vertex to be v or v+3.
bool crossing_rule(const PairFamily& q, Vertex hat) {
  for (Vertex v = 0; v + 3 < q.ambient(); ++v) {
    if (q.contains(v, v + 2) && q.contains(v + 1, v + 3) && hat != v && hat != v + 3) return false;
  }
  return true;
}

}  // namespace

Sides theorem1_sides(int n, const PairFamily& pairing) {
  Pairing p(pairing);
  return {is_indecomposable(inv(n, pairing)), is_irreducible_pairing(p) && meets_mc(n, pairing)};
}

Sides theorem2_sides(int n, const PairFamily& quasi) {
  auto v = quasi_verdicts(n, QuasiPairing(quasi));
  return {v.irreducible && v.transversal, v.whole || v.without_minus || v.without_plus};
}

Conditions theorem3_conditions(int n, const PairFamily& quasi) {
  QuasiPairing q(quasi);
  const auto& a = q.anatomy();
  const auto covered = support(quasi);
  Conditions c;
  c.c1 = is_irreducible_quasi(q) && meets_mc(n, quasi);
  c.c2 = a.v_plus >= a.v_minus + 2;
  c.c3 = crossing_rule(quasi, a.v_hat);
  c.c4 = true;
  for (Vertex v = 0; v + 1 < n; ++v) {
    if (!quasi.contains(v, v + 1)) continue;
    bool ok = (a.v_hat == v || a.v_hat == v + 1) && covered.contains(a.v_hat - 1) &&
              covered.contains(a.v_hat + 1);
    if (!ok) c.c4 = false;
  }
  return c;
}

TheoremInstance theorem1_check(int n, const PairFamily& pairing) {
  Pairing p(pairing);
  TheoremInstance inst{.check = "T1", .n = n, .family = pairing};
  bool irreducible = is_irreducible_pairing(p);
  bool transversal = meets_mc(n, pairing);
  inst.lhs = is_indecomposable(inv(n, pairing));
  inst.rhs = irreducible && transversal;
  inst.in_hypothesis = n >= kTheoremMinOrder;
  inst.details = {{"irreducible", irreducible}, {"transversal", transversal}};
  return inst;
}

TheoremInstance theorem2_check(int n, const PairFamily& quasi) {
  auto v = quasi_verdicts(n, QuasiPairing(quasi));
  TheoremInstance inst{.check = "T2", .n = n, .family = quasi};
  inst.lhs = v.irreducible && v.transversal;
  inst.rhs = v.whole || v.without_minus || v.without_plus;
  inst.in_hypothesis = n >= kTheoremMinOrder;
  inst.details = {{"irreducible", v.irreducible},
                  {"transversal", v.transversal},
                  {"T", v.whole},
                  {"T-v-", v.without_minus},
                  {"T-v+", v.without_plus}};
  return inst;
}

TheoremInstance theorem3_check(int n, const PairFamily& quasi) {
  auto c = theorem3_conditions(n, quasi);
  TheoremInstance inst{.check = "T3", .n = n, .family = quasi};
  inst.lhs = is_indecomposable(inv(n, quasi));
  inst.rhs = c.all();
  inst.in_hypothesis = n >= kTheoremMinOrder;
  inst.details = {{"C1", c.c1}, {"C2", c.c2}, {"C3", c.c3}, {"C4", c.c4}};

  // The containment clause already keeps the shared vertex off both ends
  // whenever an adjacent pair is present.
  QuasiPairing q(quasi);
  auto hat = q.anatomy().v_hat;
  bool has_adjacent = std::ranges::any_of(quasi.pairs(), [](Pair p) { return p.hi == p.lo + 1; });
  if (c.c4 && has_adjacent && (hat == 0 || hat == n - 1)) {
    throw std::logic_error("C4 holds with the shared vertex at an end: " + format_pairs(quasi));
  }
  return inst;
}

bool is_violation(const TheoremInstance& inst) {
  if (!inst.in_hypothesis) return false;
  if (inst.check == "T2" && inst.n == kTheoremMinOrder) return inst.rhs && !inst.lhs;
  if (inst.check == "C1" && !detail_of(inst, "transversal")) return true;
  return inst.lhs != inst.rhs;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Evaluates `check` on every family (in parallel) and files each instance
/// in input order. Returns all instances for tallying.
template <class Check>
std::vector<TheoremInstance> run_checks(VerificationReport& report,
                                        const std::vector<PairFamily>& families,
                                        const VerifyOptions& options, Check&& check) {
  std::vector<TheoremInstance> results(families.size());
  detail::parallel_for(families.size(), options.jobs,
                       [&](std::size_t i) { results[i] = check(families[i]); });
  for (const auto& inst : results) {
    ++report.checked;
    if (is_violation(inst)) {
      report.violations.push_back(inst);
    } else if (inst.lhs != inst.rhs) {
      report.recorded.push_back(inst);
    }
  }
  return results;
}

std::uint64_t count_where(const std::vector<TheoremInstance>& results, bool TheoremInstance::*side) {
  return static_cast<std::uint64_t>(
      std::ranges::count_if(results, [&](const TheoremInstance& i) { return i.*side; }));
}

void tally(VerificationReport& report, std::string name, std::uint64_t value) {
  report.tallies.emplace_back(std::move(name), value);
}

void check_range(int n_min, int n_max) {
  if (n_min < 0 || n_min > n_max) {
    throw InputError("bad n range " + std::to_string(n_min) + ".." + std::to_string(n_max));
  }
}

}  // namespace

VerificationReport verify_range(int theorem, int n_min, int n_max, const VerifyOptions& options) {
  if (theorem < 1 || theorem > 3) {
    throw InputError("unknown theorem " + std::to_string(theorem) + " (expected 1, 2 or 3)");
  }
  check_range(n_min, n_max);
  const auto start = Clock::now();
  VerificationReport report{.theorem = std::to_string(theorem), .n_min = n_min, .n_max = n_max};

  for (int n = n_min; n <= n_max; ++n) {
    EnumSpec spec{.n = n,
                  .kind = theorem == 1 ? EnumKind::partial_pairing : EnumKind::partial_quasi,
                  .include_empty = true,
                  .max_n = options.max_n};
    auto families = enumerate(spec);
    auto results = run_checks(report, families, options, [&](const PairFamily& f) {
      switch (theorem) {
        case 1: return theorem1_check(n, f);
        case 2: return theorem2_check(n, f);
        default: return theorem3_check(n, f);
      }
    });
    const auto at = "n=" + std::to_string(n);
    tally(report, at + ":families", families.size());
    tally(report, at + ":lhs", count_where(results, &TheoremInstance::lhs));
    tally(report, at + ":rhs", count_where(results, &TheoremInstance::rhs));
  }
  report.ms = elapsed_ms(start);
  return report;
}

VerificationReport corollary_checks(int n_min, int n_max, const VerifyOptions& options) {
  check_range(n_min, n_max);
  const auto start = Clock::now();
  VerificationReport report{.theorem = "corollaries", .n_min = n_min, .n_max = n_max};

  for (int n = n_min; n <= n_max; ++n) {
    const std::string at = ":n=" + std::to_string(n);
    if (n % 2 == 0 && n >= 6) {
      auto families = enumerate({.n = n, .kind = EnumKind::pairing, .max_n = options.max_n});
      auto results = run_checks(report, families, options, [&](const PairFamily& f) {
        TheoremInstance inst{.check = "C1", .n = n, .family = f};
        inst.lhs = is_irreducible_pairing(Pairing(f));
        inst.rhs = is_indecomposable(inv(n, f));
        inst.details = {{"transversal", meets_mc(n, f)}};
        return inst;
      });
      tally(report, "C1" + at + ":irreducible", count_where(results, &TheoremInstance::lhs));
      tally(report, "C1" + at + ":indecomposable", count_where(results, &TheoremInstance::rhs));
    }
    if (n % 2 == 1 && n >= 5) {
      auto families = enumerate({.n = n, .kind = EnumKind::quasi, .max_n = options.max_n});
      if (n >= 7) {
        run_checks(report, families, options, [&](const PairFamily& f) {
          auto v = quasi_verdicts(n, QuasiPairing(f));
          TheoremInstance inst{.check = "C2", .n = n, .family = f};
          inst.lhs = v.irreducible;
          inst.rhs = v.whole || v.without_minus || v.without_plus;
          inst.details = {{"T", v.whole}, {"T-v-", v.without_minus}, {"T-v+", v.without_plus}};
          return inst;
        });
      }
      run_checks(report, families, options, [&](const PairFamily& f) {
        QuasiPairing q(f);
        const auto& a = q.anatomy();
        bool irreducible = is_irreducible_quasi(q);
        bool spread = a.v_plus >= a.v_minus + 2;
        bool crossing = crossing_rule(f, a.v_hat);
        bool adjacent = true;
        for (Vertex v = 0; v + 1 < n; ++v) {
          if (f.contains(v, v + 1) && !((a.v_hat == v || a.v_hat == v + 1) && a.v_hat != 0 &&
                                        a.v_hat != n - 1))
            adjacent = false;
        }
        TheoremInstance inst{.check = "C3", .n = n, .family = f};
        inst.lhs = is_indecomposable(inv(n, f));
        inst.rhs = irreducible && spread && crossing && adjacent;
        inst.details = {{"1", irreducible}, {"2", spread}, {"3", crossing}, {"4", adjacent}};
        return inst;
      });
      tally(report, "quasi" + at + ":families", families.size());
    }
  }
  report.ms = elapsed_ms(start);
  return report;
}

}  // namespace tourn
