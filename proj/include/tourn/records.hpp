#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include <json.hpp>

#include "tourn/enumeration.hpp"
#include "tourn/theorems.hpp"

namespace tourn {

using Json = nlohmann::ordered_json;

/// One JSON-lines record for enumerate / census output:
/// {"n", "kind", "pairs", "indecomposable", "irreducible", "class"}.
Json family_record(int n, EnumKind kind, const PairFamily& family, bool indecomposable,
                   bool irreducible, std::optional<int> class_id);

/// Same record with the two verdicts computed here.
Json family_record(int n, EnumKind kind, const PairFamily& family);

Json instance_json(const TheoremInstance& inst);

/// {"theorem", "n_range", "checked", "violations", "ms"} plus "recorded"
/// and "tallies" when non-empty.
Json report_json(const VerificationReport& report);

/// {"m": count, ...} in increasing m.
Json count_table_json(const std::map<int, std::uint64_t>& counts);

}  // namespace tourn
