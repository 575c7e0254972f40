#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "artin/arith/bigint.hpp"

namespace artin {

/// Homogeneous quartic form F(X, Y, Z) with integer coefficients. The curve it
/// stands for is F / denominator = 0; primes of the denominator must be bad.
struct PlaneQuarticSpec {
    using Exponents = std::array<unsigned, 3>;  // powers of X, Y, Z

    std::string label;
    std::map<Exponents, BigInt> monomials;
    BigInt denominator{1};
    std::vector<std::uint64_t> bad_primes;

    /// Throws PreconditionError for a non-homogeneous or empty form.
    void validate() const;
    /// Human-readable problems that do not block loading.
    std::vector<std::string> warnings() const;

    bool is_bad(std::uint64_t p) const;
    BigInt eval(const BigInt& x, const BigInt& y, const BigInt& z) const;
};

/// Projective F_p-points, chart by chart: Z = 1, then (x : 1 : 0), then (1 : 0 : 0).
std::uint64_t count_quartic(const PlaneQuarticSpec& Q, std::uint64_t p);

}  // namespace artin
