#pragma once

#include <cstdint>
#include <vector>

#include "artin/arith/intpoly.hpp"

namespace artin {

/// Polynomial over F_p, coefficients in [0, p), constant term first, no trailing zeros.
class FpPoly {
public:
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> c);
    static FpPoly reduce(const IntPoly& f, std::uint64_t p);
    static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

    std::uint64_t prime() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    FpPoly monic() const;
    FpPoly derivative() const;

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    /// Quotient and remainder; b must be nonzero.
    friend std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }
    friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

private:
    void trim();
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);
/// base^e mod m
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m);

bool is_squarefree(const FpPoly& f);

/// Degrees of the irreducible factors of a squarefree f, ascending, from
/// distinct-degree factorization (gcd with x^(p^i) - x).
std::vector<int> ddf_pattern(const FpPoly& f);

/// Degree pattern of an integer polynomial modulo p; throws RamifiedPrime when p | disc(f).
std::vector<int> degree_pattern(const IntPoly& f, std::uint64_t p);

bool is_irreducible(const FpPoly& f);

}  // namespace artin
