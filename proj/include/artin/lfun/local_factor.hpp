#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artin/arith/intpoly.hpp"

namespace artin {

/// 1 + c_1 T + ... + c_{2g} T^{2g} attached to (label, p).
class LocalFactor {
public:
    /// Throws PreconditionError unless the constant term is 1 and the degree is 2g.
    LocalFactor(std::string label, std::uint64_t p, unsigned genus, IntPoly poly);

    const std::string& label() const { return label_; }
    std::uint64_t prime() const { return p_; }
    unsigned genus() const { return genus_; }
    const IntPoly& poly() const { return poly_; }
    BigInt coeff(unsigned i) const { return poly_[i]; }

    /// abar_i = (-1)^i c_i / p^(i/2), i = 0..2g.
    std::vector<long double> normalized() const;

    /// c_{2g-i} = p^(g-i) c_i for all i (the symmetry abar_i = abar_{2g-i}).
    bool has_functional_equation() const;
    /// c_i^2 <= binom(2g, i)^2 p^i for all i (|abar_i| <= binom(2g, i)), checked exactly.
    bool within_weil_bounds() const;
    /// Throws InternalError naming the violated invariant.
    void check_invariants() const;

    std::string to_string() const { return artin::to_string(poly_); }

    friend bool operator==(const LocalFactor& a, const LocalFactor& b) {
        return a.p_ == b.p_ && a.poly_ == b.poly_;
    }

private:
    std::string label_;
    std::uint64_t p_;
    unsigned genus_;
    IntPoly poly_;
};

/// 1 - aT + pT^2
IntPoly elliptic_poly(const BigInt& a, std::uint64_t p);

}  // namespace artin
