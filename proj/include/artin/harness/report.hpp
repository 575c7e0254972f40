#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "artin/arith/bigint.hpp"
#include "artin/satotate/moments.hpp"

namespace artin {

using Value = std::variant<std::string, std::int64_t, BigInt, double, Rational, bool>;

struct Record {
    std::vector<std::pair<std::string, Value>> fields;

    Record& set(const std::string& name, Value v);
    /// Throws NotFound.
    const Value& get(const std::string& name) const;
};

/// Rationals as "num/den", integers in full, doubles in fixed notation with 12 decimals,
/// booleans as true/false.
std::string format_value(const Value& v);

/// Header line plus one line per record in `columns` order; missing fields are empty.
std::string to_csv(const std::vector<std::string>& columns, const std::vector<Record>& rows);
/// Array of objects in `columns` order; exact values become strings.
nlohmann::ordered_json to_json(const std::vector<std::string>& columns, const std::vector<Record>& rows);

/// Writes dir/stem.csv and dir/stem.json; creates dir. Throws Error on I/O failure.
void emit_report(const std::filesystem::path& dir, const std::string& stem, const std::vector<std::string>& columns,
                 const std::vector<Record>& rows);
void write_text(const std::filesystem::path& path, const std::string& text);

const std::vector<std::string>& moment_columns();
Record moment_record(const MomentReport& r);

}  // namespace artin
