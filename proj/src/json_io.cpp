#include "hypertour/json_io.hpp"

#include <string>

#include "hypertour/errors.hpp"

namespace hypertour {

namespace {

Json arc_list(const std::vector<Arc>& arcs) {
  Json out = Json::array();
  for (const Arc& arc : arcs) out.push_back(arc.vertices);
  return out;
}

template <typename T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw InvariantViolation(std::string("missing field \"") + name + "\"");
  }
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvariantViolation(std::string("bad field \"") + name + "\": " + e.what());
  }
}

std::vector<Score> sequence_values(const Json& j) {
  auto values = field<std::vector<Score>>(j, "values");
  if (field<int>(j, "n") != static_cast<int>(values.size())) {
    throw InvariantViolation("\"n\" does not match the number of values");
  }
  return values;
}

std::vector<Arc> arcs_from(const Json& list) {
  std::vector<Arc> arcs;
  for (const Json& entry : list) arcs.push_back(Arc{entry.get<std::vector<Vertex>>()});
  return arcs;
}

const char* kind_name(ViolationKind kind) {
  return kind == ViolationKind::StrictDeficit ? "strict-deficit" : "total-mismatch";
}

}  // namespace

Json to_json(const LosingScoreSequence& r) {
  return Json{{"n", r.n()}, {"k", r.k()}, {"values", r.values()}};
}

Json to_json(const ScoreSequence& s) {
  return Json{{"n", s.n()}, {"k", s.k()}, {"values", s.values()}};
}

Json to_json(const Hypertournament& h) {
  return Json{{"n", h.n()}, {"k", h.k()}, {"arcs", arc_list(h.arcs())}};
}

Json to_json(const Verdict& v) {
  Json out{{"valid", v.valid()}, {"violation", nullptr}};
  if (v.violation) {
    out["violation"] = Json{{"j", v.violation->j},
                            {"prefix_sum", v.violation->prefix_sum},
                            {"bound", v.violation->bound},
                            {"kind", kind_name(v.violation->kind)}};
  }
  return out;
}

Json to_json(const ExchangePlan& p) {
  return Json{{"kind", p.kind == ExchangeKind::Single ? "single" : "double"},
              {"removed", arc_list(p.removed)},
              {"added", arc_list(p.added)},
              {"donor", p.donor},
              {"receiver", p.receiver}};
}

LosingScoreSequence losing_sequence_from_json(const Json& j) {
  return LosingScoreSequence(field<int>(j, "k"), sequence_values(j));
}

ScoreSequence score_sequence_from_json(const Json& j) {
  return ScoreSequence(field<int>(j, "k"), sequence_values(j));
}

Hypertournament hypertournament_from_json(const Json& j) {
  const auto list = field<Json>(j, "arcs");
  if (!list.is_array()) throw MalformedHypertournament("\"arcs\" must be an array");
  std::vector<Arc> arcs;
  try {
    arcs = arcs_from(list);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedHypertournament(std::string("bad arc list: ") + e.what());
  }
  return Hypertournament(field<int>(j, "n"), field<int>(j, "k"), std::move(arcs));
}

Verdict verdict_from_json(const Json& j) {
  const bool valid = field<bool>(j, "valid");
  const Json& v = j.at("violation");
  if (valid != v.is_null()) throw InvariantViolation("\"valid\" disagrees with \"violation\"");
  if (valid) return {};
  const auto kind = field<std::string>(v, "kind");
  if (kind != "strict-deficit" && kind != "total-mismatch") {
    throw InvariantViolation("unknown violation kind \"" + kind + "\"");
  }
  return {Violation{field<int>(v, "j"), field<Score>(v, "prefix_sum"), field<Score>(v, "bound"),
                    kind == "strict-deficit" ? ViolationKind::StrictDeficit
                                             : ViolationKind::TotalMismatch}};
}

ExchangePlan exchange_plan_from_json(const Json& j) {
  const auto kind = field<std::string>(j, "kind");
  if (kind != "single" && kind != "double") {
    throw InvariantViolation("unknown exchange kind \"" + kind + "\"");
  }
  ExchangePlan p;
  p.kind = kind == "single" ? ExchangeKind::Single : ExchangeKind::Double;
  try {
    p.removed = arcs_from(field<Json>(j, "removed"));
    p.added = arcs_from(field<Json>(j, "added"));
  } catch (const nlohmann::json::exception& e) {
    throw InvariantViolation(std::string("bad arc list: ") + e.what());
  }
  p.donor = field<Vertex>(j, "donor");
  p.receiver = field<Vertex>(j, "receiver");
  return p;
}

}  // namespace hypertour
