#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace artin {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& n) { return n.get_str(); }

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline BigInt pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt from_u64(std::uint64_t v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return r;
}

inline std::int64_t to_i64(const BigInt& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
    return n.get_si();
}

/// Least nonnegative residue of n modulo m (m > 0).
inline std::uint64_t mod_u64(const BigInt& n, std::uint64_t m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), from_u64(m).get_mpz_t());
    return r.get_ui();
}

}  // namespace artin
