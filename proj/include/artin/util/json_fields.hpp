#pragma once

#include <filesystem>
#include <string>

#include "artin/arith/bigint.hpp"
#include "json.hpp"

namespace artin::jf {

using nlohmann::json;

/// Parses `text`; syntax errors become ConfigError with the parser's line/column message.
json parse(const std::string& text, const std::string& source);
json parse_file(const std::filesystem::path& path);

/// Member `key` of object `obj`; `path` names obj in diagnostics ("curves[2]").
const json& require(const json& obj, const std::string& key, const std::string& path);
const json& require_array(const json& obj, const std::string& key, const std::string& path);

/// JSON integer or decimal string.
BigInt to_bigint(const json& v, const std::string& path);
long to_long(const json& v, const std::string& path);
std::string to_str(const json& v, const std::string& path);

}  // namespace artin::jf
