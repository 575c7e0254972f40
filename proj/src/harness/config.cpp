#include "artin/harness/config.hpp"

#include <sstream>

#include "artin/error.hpp"

namespace artin {

void RunConfig::validate() const {
    if (!std::filesystem::is_regular_file(registry))
        throw ConfigError("registry file not found: " + registry.string());
    if (!std::filesystem::is_directory(groups)) throw ConfigError("group-table directory not found: " + groups.string());
    for (const char* id : {"S4", "C2", "G288"})
        if (!std::filesystem::is_regular_file(groups / (std::string(id) + ".json")))
            throw ConfigError("group table " + std::string(id) + ".json missing from " + groups.string());
    if (theta_primes < 5 || divisibility_primes < 5 || chebotarev_primes < 5 || moment_primes < 5)
        throw ConfigError("prime bounds must be at least 5");
    if (search_height < 2) throw ConfigError("search height must be at least 2");
}

RunConfig default_config() {
    RunConfig c;
    const std::filesystem::path data(ARTIN_DATA_DIR);
    c.registry = data / "registry.json";
    c.groups = data / "groups";
    return c;
}

std::array<long, 4> parse_quartic_coeffs(const std::string& s) {
    std::array<long, 4> out{};
    std::stringstream in(s);
    std::string part;
    std::size_t k = 0;
    while (std::getline(in, part, ',')) {
        if (k == 4) throw ConfigError("quartic \"" + s + "\": expected four coefficients a,b,c,d");
        try {
            std::size_t used = 0;
            out[k] = std::stol(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw ConfigError("quartic \"" + s + "\": bad coefficient \"" + part + "\"");
        }
        ++k;
    }
    if (k != 4) throw ConfigError("quartic \"" + s + "\": expected four coefficients a,b,c,d");
    return out;
}

}  // namespace artin
