#pragma once

// JSON encodings shared by the CLI commands. Exact numbers are strings
// ("-3/2"); indices and counts are JSON integers; key order is fixed.

#include <string>

#include "json.hpp"
#include "toric/fan.hpp"
#include "toric/intersection.hpp"
#include "toric/positivity.hpp"

namespace toric::report {

using Json = nlohmann::ordered_json;

Json rat_array(const RatVec& v);
Json int_array(const std::vector<Integer>& v);
Json relation(const PositiveRelation& rel);
Json dagger(const DaggerReport& rep);
Json seshadri(const DaggerReport& rep);
Json wall_table(const Fan& fan);
Json theorem1(const std::string& name, const Theorem1Report& rep);
Json scan(const ScanReport& rep, std::size_t budget, std::uint64_t seed);

/// Compact serialization with a trailing newline.
std::string emit(const Json& doc);

}  // namespace toric::report
