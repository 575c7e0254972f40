#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "artin/arith/intpoly.hpp"
#include "artin/chars/group_table.hpp"

namespace artin {

/// Splitting field of a monic quartic x^4 + a x^3 + b x^2 + c x + d with Galois group S4
/// and discriminant -3 times a square.
class S4Field {
public:
    /// Throws PreconditionError naming the first failed certificate.
    static S4Field from_coeffs(long a, long b, long c, long d);

    const IntPoly& quartic() const { return f_; }
    const IntPoly& resolvent() const { return res_; }
    const BigInt& discriminant() const { return disc_; }
    /// Squarefree part of the discriminant (always -3 here).
    const BigInt& disc_kernel() const { return kernel_; }
    const std::vector<BigInt>& bad_primes() const { return bad_; }
    bool is_ramified(std::uint64_t p) const { return mod_u64(disc_, p) == 0; }
    std::array<long, 4> coeffs() const { return abcd_; }
    /// "a,b,c,d", the form accepted on the command line.
    std::string coeff_string() const;
    std::string to_string() const { return artin::to_string(f_, "x"); }

private:
    IntPoly f_, res_;
    BigInt disc_, kernel_;
    std::vector<BigInt> bad_;
    std::array<long, 4> abcd_{};
};

/// y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2)
IntPoly resolvent_cubic(long a, long b, long c, long d);

/// Frob_p in Gal(L/Q) = S4 and the residue degrees it implies.
struct FrobeniusDatum {
    std::uint64_t p = 0;
    std::string cls;  // 1a, 2a, 2b, 3a or 4a
    std::vector<int> quartic_pattern;
    std::vector<int> cubic_pattern;
    int f_L4 = 0;  // largest quartic factor degree
    int f_L3 = 0;  // largest resolvent factor degree
    int f_Q3 = 0;  // residue degree in Q(sqrt(-3))
};

/// Class of a quartic degree pattern; throws InconsistentData for patterns outside S4.
std::string class_of_pattern(const std::vector<int>& pattern);

/// Throws RamifiedPrime when p divides the discriminant and InconsistentData when the
/// quartic pattern, resolvent pattern and (-3|p) disagree.
FrobeniusDatum frobenius_class(const S4Field& F, std::uint64_t p);

/// Resolvent-cubic degree patterns at the first `count` primes not dividing `avoid`.
std::vector<std::vector<int>> cubic_fingerprint(const S4Field& F, const BigInt& avoid, std::size_t count = 100);

/// True when the two resolvent cubics split alike at 100 common unramified primes.
bool same_cubic_field(const S4Field& F, const S4Field& G, std::size_t count = 100);

/// First monic quartic with |coefficients| <= H in the order (|a|+|b|+|c|+|d|, a, b, c, d)
/// that passes every certificate and whose resolvent field differs from each excluded one.
/// Throws NotFound.
S4Field find_s4_quartic(long H, const std::vector<S4Field>& exclude = {});

/// Number of primes in [lo, hi] in each class, unramified primes only.
std::map<std::string, long> class_frequencies(const S4Field& F, std::uint64_t lo, std::uint64_t hi);

/// Classes C of G with pi_L(C) = class(F, p) and pi_L'(C) = class(F', p).
/// Throws InconsistentData on an empty answer.
std::vector<std::string> joint_class(const GroupTable& G, const S4Field& F, const S4Field& Fp, std::uint64_t p,
                                     const std::string& proj_L = "pi_L", const std::string& proj_Lp = "pi_Lp");

}  // namespace artin
