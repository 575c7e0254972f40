#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace artin {

struct RunConfig {
    std::filesystem::path registry;
    std::filesystem::path groups;
    std::filesystem::path out_dir;  // empty: nothing written

    std::uint64_t theta_primes = 1000;
    std::uint64_t divisibility_primes = 2000;
    std::uint64_t chebotarev_primes = 10000;
    std::uint64_t moment_primes = 100000;

    long search_height = 4;
    std::optional<std::array<long, 4>> quartic;   // L; searched when absent
    std::optional<std::array<long, 4>> quartic2;  // L'

    unsigned workers = 0;  // 0 = hardware concurrency
    bool include_supersingular = true;
    /// Treat the order-288 class sizes as trusted; the printed table then fails validation.
    bool strict_table2 = false;

    /// ConfigError for missing paths, missing group tables or non-positive bounds.
    void validate() const;
};

/// Shipped registry and group tables.
RunConfig default_config();

/// "a,b,c,d"; ConfigError otherwise.
std::array<long, 4> parse_quartic_coeffs(const std::string& s);

}  // namespace artin
