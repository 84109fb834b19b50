#include "root_enclose/map_io.hpp"

#include <fstream>
#include <sstream>

namespace root_enclose {

using nlohmann::json;

namespace {

std::vector<Rational> coefficient_array(const json& doc, const char* key, int n) {
    if (!doc.contains(key)) throw SpecError(std::string("map spec is missing \"") + key + "\"");
    const json& arr = doc.at(key);
    if (!arr.is_array()) throw SpecError(std::string("\"") + key + "\" must be an array");
    const auto expected = static_cast<std::size_t>(2 * n + 1);
    if (arr.size() != expected) {
        throw SpecError(std::string("\"") + key + "\" must have " + std::to_string(expected) +
                        " entries (2n+1 for n=" + std::to_string(n) + "), got " + std::to_string(arr.size()));
    }
    std::vector<Rational> out;
    out.reserve(expected);
    for (const json& v : arr) {
        if (!v.is_string()) throw SpecError(std::string("\"") + key + "\" entries must be rational strings");
        try {
            out.push_back(Rational::parse(v.get<std::string>()));
        } catch (const std::exception& e) {
            throw SpecError(std::string("\"") + key + "\": " + e.what());
        }
    }
    return out;
}

}  // namespace

MapCoefficients map_from_json(const json& doc) {
    if (!doc.is_object()) throw SpecError("map spec must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "n" && key != "p" && key != "q") throw SpecError("unknown field \"" + key + "\" in map spec");
    }
    if (!doc.contains("n") || !doc.at("n").is_number_integer()) {
        throw SpecError("map spec needs an integer field \"n\"");
    }
    const auto n = doc.at("n").get<long long>();
    if (n < 2 || n > 4096) throw SpecError("map degree n must be in [2, 4096], got " + std::to_string(n));
    const int degree = static_cast<int>(n);
    return MapCoefficients(degree, coefficient_array(doc, "p", degree), coefficient_array(doc, "q", degree));
}

json map_to_json(const MapCoefficients& m) {
    json p = json::array();
    json q = json::array();
    for (const Rational& c : m.p()) p.push_back(c.to_string());
    for (const Rational& c : m.q()) q.push_back(c.to_string());
    return json{{"n", m.degree()}, {"p", std::move(p)}, {"q", std::move(q)}};
}

MapCoefficients parse_map_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("map spec is not valid JSON: ") + e.what());
    }
    return map_from_json(doc);
}

MapCoefficients load_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open map file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_map_text(buf.str());
}

}  // namespace root_enclose
