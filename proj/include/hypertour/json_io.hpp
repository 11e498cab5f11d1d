#pragma once

#include <json.hpp>

#include "hypertour/realize.hpp"
#include "hypertour/types.hpp"
#include "hypertour/verify.hpp"

namespace hypertour {

/// Insertion-ordered so dumps read {"n":..,"k":..,...}.
using Json = nlohmann::ordered_json;

// {"n":int,"k":int,"values":[int]}
Json to_json(const LosingScoreSequence& r);
Json to_json(const ScoreSequence& s);
// {"n":int,"k":int,"arcs":[[int,...]]}
Json to_json(const Hypertournament& h);
// {"valid":bool,"violation":{"j","prefix_sum","bound","kind"}|null}
Json to_json(const Verdict& v);
// {"kind":"single"|"double","removed":[[..]],"added":[[..]],"donor":int,"receiver":int}
Json to_json(const ExchangePlan& p);

/// The parsers throw InvariantViolation (or MalformedHypertournament) on
/// schema errors, including an "n" that disagrees with the payload.
LosingScoreSequence losing_sequence_from_json(const Json& j);
ScoreSequence score_sequence_from_json(const Json& j);
Hypertournament hypertournament_from_json(const Json& j);
Verdict verdict_from_json(const Json& j);
ExchangePlan exchange_plan_from_json(const Json& j);

}  // namespace hypertour
