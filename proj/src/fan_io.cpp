#include "toric/fan_io.hpp"

#include <fstream>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

Integer json_integer(const nlohmann::json& v, const char* what) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()), 10);
    return Integer(std::to_string(v.get<std::int64_t>()), 10);
  }
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
    }
  }
  throw Error(ErrorCode::ParseError, std::string(what) + " must be an integer");
}

}  // namespace

Fan fan_from_json(const nlohmann::json& doc, std::vector<std::string>* warnings) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "fan document must be a JSON object");
  for (const char* key : {"dim", "rays", "max_cones"})
    if (!doc.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() <= 0)
    throw Error(ErrorCode::ParseError, "'dim' must be a positive integer");
  if (!doc["rays"].is_array() || !doc["max_cones"].is_array())
    throw Error(ErrorCode::ParseError, "'rays' and 'max_cones' must be arrays");

  const auto dim = doc["dim"].get<std::size_t>();
  std::vector<IntVec> rays;
  for (const auto& r : doc["rays"]) {
    if (!r.is_array()) throw Error(ErrorCode::ParseError, "each ray must be an array");
    IntVec v;
    for (const auto& x : r) v.push_back(json_integer(x, "ray entry"));
    if (!is_zero(v) && !is_primitive(v)) {
      IntVec p = primitive(v);
      if (warnings) {
        std::ostringstream msg;
        msg << "ray " << rays.size() << " was not primitive; divided by " << gcd_of(v).get_str();
        warnings->push_back(msg.str());
      }
      v = std::move(p);
    }
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const auto& c : doc["max_cones"]) {
    if (!c.is_array()) throw Error(ErrorCode::ParseError, "each cone must be an array");
    Cone cone;
    for (const auto& i : c) {
      if (!i.is_number_integer() || i.get<long long>() < 0)
        throw Error(ErrorCode::ParseError, "cone entries must be non-negative integers");
      cone.push_back(i.get<std::size_t>());
    }
    cones.push_back(std::move(cone));
  }
  return Fan(dim, std::move(rays), std::move(cones));
}

nlohmann::ordered_json fan_to_json(const Fan& fan) {
  nlohmann::ordered_json doc;
  doc["dim"] = fan.dim();
  auto rays = nlohmann::ordered_json::array();
  for (const auto& r : fan.rays()) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& x : r) {
      if (x.fits_slong_p()) row.push_back(x.get_si());
      else row.push_back(x.get_str());
    }
    rays.push_back(std::move(row));
  }
  doc["rays"] = std::move(rays);
  auto cones = nlohmann::ordered_json::array();
  for (const auto& c : fan.max_cones()) cones.push_back(c);
  doc["max_cones"] = std::move(cones);
  return doc;
}

Fan load_fan(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                path.string() + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return fan_from_json(doc, warnings);
}

void save_fan(const Fan& fan, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  out << fan_to_json(fan).dump() << '\n';
}

}  // namespace toric
