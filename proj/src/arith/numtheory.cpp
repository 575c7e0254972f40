#include "artin/arith/numtheory.hpp"

#include <cmath>

#include "artin/error.hpp"

namespace artin {

BigInt power_sum(const BigInt& a, const BigInt& p, long r) {
    if (r < 0) throw PreconditionError("power_sum: negative exponent r = " + std::to_string(r));
    if (r == 0) return 2;
    BigInt prev = 2, cur = a;
    for (long k = 2; k <= r; ++k) {
        BigInt next = a * cur - p * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt catalan(unsigned long n) {
    BigInt r = binomial(2 * n, n);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), n + 1);
    return r;
}

int kronecker(const BigInt& d, const BigInt& n) { return mpz_kronecker(d.get_mpz_t(), n.get_mpz_t()); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic for all 64-bit n
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < 2 || hi < lo) return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i) {
        if (!composite[i]) out.push_back(i);
    }
    return out;
}

bool is_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::vector<BigInt> prime_divisors(const BigInt& n) {
    std::vector<BigInt> out;
    BigInt m = abs(n);
    if (m == 0) return out;
    for (BigInt q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            out.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

bool is_squarefree(const BigInt& n) {
    if (n == 0) return false;
    BigInt m = abs(n);
    for (BigInt q = 2; q * q <= m; ++q) {
        if (m % (q * q) == 0) return false;
        if (m % q == 0) m /= q;
    }
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long r = n;
    for (unsigned long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            while (n % q == 0) n /= q;
            r -= r / q;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

}  // namespace artin
