#pragma once

#include <json.hpp>

#include "modcat/centerdata.hpp"
#include "modcat/extlab.hpp"
#include "modcat/frobalg.hpp"

namespace modcat {

using Json = nlohmann::json;

// Rationals serialize as "a/b" strings; no floating point appears in any
// document. Parsers throw Error(bad_input) on malformed data.

Json rational_to_json(const Rational& r);
Json exponent_to_json(const RootExponent& q);
RootExponent exponent_from_json(const Json& j);

Json cyclo_to_json(const CycloNumber& c);
CycloNumber cyclo_from_json(const Json& j);

Json finab_to_json(const FinAbGroup& g);
FinAbGroup finab_from_json(const Json& j);

Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json metric_to_json(const MetricGroup& m);
MetricGroup metric_from_json(const Json& j);

Json modular_data_to_json(const ModularData& d, bool include_fusion = false);
ModularData modular_data_from_json(const Json& j);

/// Q/Z-valued 3-cocycle as a nested array of "a/b" strings.
Json qz3_to_json(const QzCocycle3& w);
QzCocycle3 qz3_from_json(const FiniteGroup& gamma, const Json& j);

/// Module-valued cochain: nested arrays (depth = degree) of integer tuples.
Json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const AbAction& module, long long degree, const Json& j);

Json action_to_json(const AbAction& a);
AbAction action_from_json(const FiniteGroup& gamma, const Json& j);

Json local_system_to_json(const LocalSystemDatum& l);
/// Accepts {"kind":"cyclic"|"trace"|"split"|"induced"|"explicit", ...}.
LocalSystemDatum local_system_from_json(const FiniteGroup& gamma, const Json& j);

Json outer_action_to_json(const OuterActionData& d);
OuterActionData outer_action_from_json(const Json& j);

Json error_to_json(const Error& e);

} // namespace modcat
