#include "genus/serialize.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace genus {

nlohmann::ordered_json table_to_json(const GenusTable& t) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = t.n;
    j["kind"] = kind_name(t.kind);
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [key, c] : t.counts) {
        nlohmann::ordered_json e;
        e["g"] = key.first;
        e["type"] = key.second.parts;
        e["count"] = c.get_str();
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

GenusTable table_from_json(const nlohmann::json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw std::invalid_argument("unsupported table schema version");
    GenusTable t;
    t.n = j.at("n").get<int>();
    t.kind = kind_from_name(j.at("kind").get<std::string>());
    for (const auto& e : j.at("entries")) {
        const int g = e.at("g").get<int>();
        IntegerPartition type(e.at("type").get<std::vector<int>>());
        BigInt c(e.at("count").get<std::string>());
        t.counts[{g, std::move(type)}] = std::move(c);
    }
    return t;
}

std::string params_checksum(const std::string& params) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : params) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace genus
