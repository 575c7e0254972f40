#pragma once

#include <cstdint>
#include <vector>

#include "artin/arith/fp_poly.hpp"

namespace artin {

/// F_{p^r} = F_p[x]/(m(x)), m the lexicographically smallest monic irreducible of degree r.
/// Elements are coefficient vectors of length r; they also have a dense index in [0, q)
/// (base-p digits), which the point-counting tables use.
class Fq {
public:
    using Elem = std::vector<std::uint64_t>;

    Fq(std::uint64_t p, unsigned r);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return r_; }
    std::uint64_t order() const { return q_; }
    const FpPoly& modulus() const { return modulus_; }

    Elem zero() const { return Elem(r_, 0); }
    Elem one() const;
    Elem from_int(std::int64_t v) const;
    Elem from_index(std::uint64_t idx) const;
    std::uint64_t index(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(Elem a, std::uint64_t e) const;
    /// Throws PreconditionError on zero.
    Elem inv(const Elem& a) const;
    bool is_zero(const Elem& a) const;

    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(const Elem& a) const;

private:
    std::uint64_t p_;
    unsigned r_;
    std::uint64_t q_;
    FpPoly modulus_;
    std::vector<std::uint64_t> reduction_;  // x^r = -sum reduction_[i] x^i, i.e. modulus coefficients
};

/// Smallest monic irreducible of degree r over F_p in lexicographic order on
/// (c_{r-1}, ..., c_0), each coefficient read as an integer in [0, p).
FpPoly smallest_irreducible(std::uint64_t p, unsigned r);

}  // namespace artin
