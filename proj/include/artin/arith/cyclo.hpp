#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/arith/bigint.hpp"

namespace artin {

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned m);

/// Element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^(phi(m)-1).
///
/// Values with different conductors are combined in the lcm conductor. The
/// representation is canonical after reduction, so equality is coefficientwise
/// once both sides live in the same conductor.
class CycloInt {
public:
    CycloInt() : m_(1), c_{BigInt(0)} {}
    CycloInt(long n) : m_(1), c_{BigInt(n)} {}  // NOLINT(google-explicit-constructor)
    CycloInt(const BigInt& n) : m_(1), c_{n} {}  // NOLINT(google-explicit-constructor)

    /// zeta_m^k for any integer k.
    static CycloInt zeta(unsigned m, long k = 1);
    /// Reduces an arbitrary exponent vector sum_k c_k zeta_m^k (length unrestricted).
    static CycloInt from_exponents(unsigned m, const std::vector<BigInt>& c);
    /// Power-basis coefficients; length must be phi(m).
    static CycloInt from_coeffs(unsigned m, std::vector<BigInt> c);

    unsigned conductor() const { return m_; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    bool is_zero() const;
    std::optional<BigInt> to_integer() const;
    bool is_rational_integer() const { return to_integer().has_value(); }

    /// Re-expresses this value in Z[zeta_M]; M must be a multiple of the conductor.
    CycloInt embed(unsigned M) const;

    CycloInt conj() const { return galois(-1); }
    /// Image under zeta_m -> zeta_m^k, gcd(k, m) = 1.
    CycloInt galois(long k) const;
    /// Trace down to Q: sum of all Galois conjugates.
    BigInt trace() const;

    CycloInt operator-() const;
    CycloInt& operator+=(const CycloInt& o);
    CycloInt& operator-=(const CycloInt& o);
    CycloInt& operator*=(const CycloInt& o) { return *this = *this * o; }
    friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
    friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
    friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
    friend bool operator==(const CycloInt& a, const CycloInt& b);

    std::string to_string() const;

private:
    CycloInt(unsigned m, std::vector<BigInt> c) : m_(m), c_(std::move(c)) {}
    unsigned m_;
    std::vector<BigInt> c_;
};

inline bool is_zero(const CycloInt& x) { return x.is_zero(); }

enum class CycloOp { add, mul, conj, eval_trace };

/// Arithmetic entry point with an explicit conductor policy: when `allow_embed`
/// is false, operands of different conductors are rejected instead of being
/// combined in the lcm conductor. `conj` and `eval_trace` ignore b.
CycloInt cyclo_arith(CycloOp op, const CycloInt& a, const CycloInt& b, bool allow_embed = true);

}  // namespace artin
