#include "artin/util/json_fields.hpp"

#include <fstream>
#include <sstream>

#include "artin/error.hpp"

namespace artin::jf {

json parse(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(source + ": " + e.what());
    }
}

json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.string());
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw ConfigError(path + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError(path + ": missing field \"" + key + "\"");
    return *it;
}

const json& require_array(const json& obj, const std::string& key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_array()) throw ConfigError(path + "." + key + ": expected an array");
    return v;
}

BigInt to_bigint(const json& v, const std::string& path) {
    if (v.is_number_integer()) return BigInt(std::to_string(v.get<std::int64_t>()));
    if (v.is_number_unsigned()) return from_u64(v.get<std::uint64_t>());
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        BigInt r;
        if (!s.empty() && r.set_str(s, 10) == 0) return r;
    }
    throw ConfigError(path + ": expected an integer, got " + v.dump());
}

long to_long(const json& v, const std::string& path) {
    const BigInt b = to_bigint(v, path);
    if (!b.fits_slong_p()) throw ConfigError(path + ": integer out of range");
    return b.get_si();
}

std::string to_str(const json& v, const std::string& path) {
    if (!v.is_string()) throw ConfigError(path + ": expected a string, got " + v.dump());
    return v.get<std::string>();
}

}  // namespace artin::jf
