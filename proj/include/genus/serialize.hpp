#pragma once

#include <string>

#include <json.hpp>

#include "genus/counting.hpp"

namespace genus {

inline constexpr int kSchemaVersion = 1;

// {schema_version, n, kind, entries: [{g, type, count}]}, entries sorted by
// (g, type). Doubles as the persistent cache format.
nlohmann::ordered_json table_to_json(const GenusTable& t);
GenusTable table_from_json(const nlohmann::json& j);

// FNV-1a hash of the parameter string, hex-encoded; cache files store it and
// are ignored on mismatch.
std::string params_checksum(const std::string& params);

}  // namespace genus
