#pragma once

// Canonical fan interchange format:
//   {"dim": n, "rays": [[int,...],...], "max_cones": [[int,...],...]}
// Ray indices are 0-based and every cone is sorted ascending.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "toric/fan.hpp"

namespace toric {

/// Schema problems throw Error(ParseError). Non-primitive rays are divided by
/// their content, with a note appended to `warnings` when it is non-null.
Fan fan_from_json(const nlohmann::json& doc, std::vector<std::string>* warnings = nullptr);

nlohmann::ordered_json fan_to_json(const Fan& fan);

/// Reads and parses a fan file. I/O and JSON syntax failures throw
/// Error(ParseError) with the byte offset when known.
Fan load_fan(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);

void save_fan(const Fan& fan, const std::filesystem::path& path);

}  // namespace toric
