#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "root_enclose/maps.hpp"

namespace root_enclose {

/// Thrown for malformed map or bench specification documents.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Map specification: {"n": 3, "p": ["-1", ...], "q": [...]}, 2n+1 rational
// strings each. Unknown fields are rejected.
MapCoefficients map_from_json(const nlohmann::json& doc);
nlohmann::json map_to_json(const MapCoefficients& m);

MapCoefficients load_map_file(const std::string& path);
MapCoefficients parse_map_text(std::string_view text);

}  // namespace root_enclose
