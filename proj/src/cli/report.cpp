#include "toric/report.hpp"

#include "toric/fan_io.hpp"

namespace toric::report {

Json rat_array(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json int_array(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json relation(const PositiveRelation& rel) {
  Json out;
  out["indices"] = rel.indices;
  out["coeffs"] = rat_array(rel.coefficients);
  return out;
}

Json dagger(const DaggerReport& rep) {
  Json out;
  out["holds"] = rep.holds;
  if (rep.witness) out["witness"] = relation(*rep.witness);
  return out;
}

Json seshadri(const DaggerReport& rep) {
  Json out;
  out["sign"] = rep.holds ? "positive" : "zero";
  if (rep.witness) out["witness"] = relation(*rep.witness);
  return out;
}

Json wall_table(const Fan& fan) {
  Json out = Json::array();
  for (const auto& [wall, curve] : all_wall_curves(fan)) {
    Json w;
    w["rays"] = wall.rays;
    w["cones"] = {wall.cones[0], wall.cones[1]};
    w["opposite"] = {wall.opposite[0], wall.opposite[1]};
    w["class"] = rat_array(curve.intersections);
    out.push_back(std::move(w));
  }
  return out;
}

Json theorem1(const std::string& name, const Theorem1Report& rep) {
  Json out;
  out["fan"] = name;
  out["status"] = std::string(to_string(rep.status));
  if (rep.status == Theorem1Report::Status::NotApplicable) {
    out["reason"] = rep.reason;
    return out;
  }
  out["sign"] = std::string(to_string(*rep.sign));
  out["projective_space"] = rep.projective_space;
  out["zero_sum_collection"] = rep.zero_sum_collection ? Json(*rep.zero_sum_collection) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json j;
    j["name"] = c.name;
    j["ok"] = c.ok;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  return out;
}

Json scan(const ScanReport& rep, std::size_t budget, std::uint64_t seed) {
  Json out;
  out["mode"] = "question4";
  out["seed"] = seed;
  out["budget"] = budget;
  Json fans = Json::array();
  for (const auto& e : rep.entries) {
    Json j;
    j["fan"] = e.name;
    j["complete"] = e.complete;
    j["smooth"] = e.smooth;
    j["projective"] = e.projective ? Json(*e.projective) : Json(nullptr);
    j["dagger"] = e.dagger_holds ? Json(*e.dagger_holds) : Json(nullptr);
    j["projective_space"] = e.projective_space;
    j["finding"] = e.finding;
    fans.push_back(std::move(j));
  }
  out["fans"] = std::move(fans);
  Json m;
  m["candidates"] = rep.mutation.candidates;
  m["too_high"] = rep.mutation.too_high;
  m["smooth"] = rep.mutation.smooth;
  m["dagger_holds"] = rep.mutation.dagger_holds;
  m["projective_space"] = rep.mutation.projective_space;
  out["mutation"] = std::move(m);
  Json findings = Json::array();
  for (const auto& f : rep.findings) {
    Json j;
    j["origin"] = f.origin;
    j["fan"] = fan_to_json(f.fan);
    findings.push_back(std::move(j));
  }
  out["findings"] = std::move(findings);
  return out;
}

std::string emit(const Json& doc) { return doc.dump() + "\n"; }

}  // namespace toric::report
