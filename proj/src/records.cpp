#include "tourn/records.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "tourn/modules.hpp"
#include "tourn/pairings.hpp"

namespace tourn {

Json family_record(int n, EnumKind kind, const PairFamily& family, bool indecomposable,
                   bool irreducible, std::optional<int> class_id) {
  Json j;
  j["n"] = n;
  j["kind"] = to_string(kind);
  j["pairs"] = format_pairs(family);
  j["indecomposable"] = indecomposable;
  j["irreducible"] = irreducible;
  j["class"] = class_id ? Json(*class_id) : Json(nullptr);
  return j;
}

Json family_record(int n, EnumKind kind, const PairFamily& family) {
  return family_record(n, kind, family, is_indecomposable(inv(n, family)), is_irreducible(family),
                       std::nullopt);
}

Json instance_json(const TheoremInstance& inst) {
  Json j;
  j["check"] = inst.check;
  j["n"] = inst.n;
  j["pairs"] = format_pairs(inst.family);
  j["lhs"] = inst.lhs;
  j["rhs"] = inst.rhs;
  j["in_hypothesis"] = inst.in_hypothesis;
  Json details = Json::object();
  for (const auto& [name, value] : inst.details) details[name] = value;
  j["details"] = std::move(details);
  return j;
}

Json report_json(const VerificationReport& report) {
  Json j;
  int id = 0;
  auto [ptr, ec] = std::from_chars(report.theorem.data(),
                                   report.theorem.data() + report.theorem.size(), id);
  if (ec == std::errc{} && ptr == report.theorem.data() + report.theorem.size()) {
    j["theorem"] = id;
  } else {
    j["theorem"] = report.theorem;
  }
  j["n_range"] = Json::array({report.n_min, report.n_max});
  j["checked"] = report.checked;
  j["violations"] = Json::array();
  for (const auto& v : report.violations) j["violations"].push_back(instance_json(v));
  j["ms"] = std::round(report.ms * 1000.0) / 1000.0;
  if (!report.recorded.empty()) {
    j["recorded"] = Json::array();
    for (const auto& r : report.recorded) j["recorded"].push_back(instance_json(r));
  }
  if (!report.tallies.empty()) {
    Json t = Json::object();
    for (const auto& [name, value] : report.tallies) t[name] = value;
    j["tallies"] = std::move(t);
  }
  return j;
}

Json count_table_json(const std::map<int, std::uint64_t>& counts) {
  Json j = Json::object();
  for (const auto& [m, c] : counts) j[std::to_string(m)] = c;
  return j;
}

}  // namespace tourn
