#pragma once

// JSON forms of reports, traces and instances (nlohmann ordered_json, so key
// order is insertion order and output is byte-stable).

#include <string>

#include <json.hpp>

#include "arguesia/instances.hpp"

namespace arguesia {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& r) { return r.str(); }

inline Json to_json(const QuadExt& q) {
  return Json{{"a", q.a().str()}, {"b", q.b().str()}, {"d", q.d().get_str()}};
}

inline Json to_json(const PPoint& p) { return Json::array({p.x().str(), p.y().str(), p.z().str()}); }

inline Json to_json(const PLine& l) {
  const Vec3& c = l.coeffs();
  return Json::array({c[0].str(), c[1].str(), c[2].str()});
}

inline Json to_json(const Conic& c) {
  Json j = Json::array();
  for (const Rat& x : c.upper()) j.push_back(x.str());
  return j;
}

inline Json to_json(const ProofStep& s) {
  return Json{{"label", s.label}, {"claim", s.claim}, {"citation", s.citation}, {"kind", s.kind},
              {"lhs", to_json(s.lhs)}, {"rhs", to_json(s.rhs)}, {"holds", s.holds()}};
}

inline Json to_json(const ProofTrace& t) {
  Json j{{"name", t.name}};
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  j["steps"] = steps;
  if (t.conclusion) j["conclusion"] = to_json(*t.conclusion);
  Json q = Json::object();
  for (const auto& [k, v] : t.quantities) q[k] = v;
  j["quantities"] = q;
  Json pts = Json::object();
  for (const auto& [k, p] : t.points) pts[k] = to_json(p);
  j["points"] = pts;
  j["verdict"] = t.verdict();
  return j;
}

inline Json to_json(const TheoremReport& r) {
  Json j{{"name", r.name}, {"seed", r.seed}};
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  Json claims = Json::array();
  for (const auto& c : r.claims)
    claims.push_back(
        Json{{"label", c.label}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"equal", c.equal}, {"metric", c.metric}});
  j["claims"] = claims;
  j["notes"] = r.notes;
  j["verdict"] = r.verdict();
  if (r.trace) j["trace"] = to_json(*r.trace);
  return j;
}

inline Json to_json(const Instance& in) {
  Json j{{"kind", in.config.kind}, {"seed", in.config.seed}, {"bounds", in.config.bounds},
         {"attempts", in.attempts}};
  j["report"] = to_json(in.report);
  return j;
}

inline Rat rat_from_json(const Json& j) { return rat_parse(j.get<std::string>()); }

inline PPoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("a point is an array of three rational strings");
  return PPoint(Vec3{rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2])});
}

inline QuadExt quadext_from_json(const Json& j) {
  return QuadExt(rat_from_json(j.at("a")), rat_from_json(j.at("b")), rat_from_json(j.at("d")));
}

inline Conic conic_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 6) throw ParseError("a conic is an array of six rational strings");
  Rat v[6];
  for (int i = 0; i < 6; ++i) v[i] = rat_from_json(j[i]);
  return Conic(Mat3{Vec3{v[0], v[1], v[2]}, Vec3{v[1], v[3], v[4]}, Vec3{v[2], v[4], v[5]}});
}

}  // namespace arguesia
