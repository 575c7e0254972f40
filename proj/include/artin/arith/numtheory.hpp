#pragma once

#include <cstdint>
#include <vector>

#include "artin/arith/bigint.hpp"

namespace artin {

/// s_r = alpha^r + conj(alpha)^r for the reciprocal roots of 1 - aT + pT^2,
/// via s_r = a*s_{r-1} - p*s_{r-2}, s_0 = 2, s_1 = a.
BigInt power_sum(const BigInt& a, const BigInt& p, long r);

BigInt catalan(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

/// Kronecker symbol (d|n).
int kronecker(const BigInt& d, const BigInt& n);

bool is_prime(std::uint64_t n);
/// All primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

bool is_square(const BigInt& n);
bool is_squarefree(const BigInt& n);
/// Prime divisors of |n| by trial division; intended for small inputs only.
std::vector<BigInt> prime_divisors(const BigInt& n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

unsigned long euler_phi(unsigned long n);

}  // namespace artin
