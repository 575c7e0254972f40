#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "artin/curves/elliptic.hpp"
#include "artin/curves/quartic.hpp"

namespace artin {

struct Registry {
    std::vector<EllipticCurveSpec> curves;
    std::vector<PlaneQuarticSpec> quartics;
    std::vector<std::string> warnings;

    /// Throws NotFound.
    const EllipticCurveSpec& curve(const std::string& label) const;
    const PlaneQuarticSpec& quartic(const std::string& label) const;
};

/// Schema and validation failures throw ConfigError naming the offending field.
Registry parse_registry(const std::string& text, const std::string& source = "<registry>");
Registry load_registry(const std::filesystem::path& path);

}  // namespace artin
