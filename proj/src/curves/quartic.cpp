#include "artin/curves/quartic.hpp"

#include <algorithm>

#include "artin/arith/numtheory.hpp"
#include "artin/error.hpp"

namespace artin {

void PlaneQuarticSpec::validate() const {
    bool any = false;
    for (const auto& [e, c] : monomials) {
        if (e[0] + e[1] + e[2] != 4) {
            throw PreconditionError(label + ": monomial X^" + std::to_string(e[0]) + " Y^" + std::to_string(e[1]) +
                                    " Z^" + std::to_string(e[2]) + " is not of degree 4");
        }
        if (c != 0) any = true;
    }
    if (!any) throw PreconditionError(label + ": zero form");
    if (denominator == 0) throw PreconditionError(label + ": zero denominator");
}

std::vector<std::string> PlaneQuarticSpec::warnings() const {
    std::vector<std::string> w;
    for (const auto& q : prime_divisors(denominator)) {
        const auto p = q.get_ui();
        if (std::find(bad_primes.begin(), bad_primes.end(), p) == bad_primes.end()) {
            w.push_back(label + ": denominator prime " + q.get_str() + " is not listed in bad_primes");
        }
    }
    return w;
}

bool PlaneQuarticSpec::is_bad(std::uint64_t p) const {
    if (std::find(bad_primes.begin(), bad_primes.end(), p) != bad_primes.end()) return true;
    return mod_u64(denominator, p) == 0;
}

BigInt PlaneQuarticSpec::eval(const BigInt& x, const BigInt& y, const BigInt& z) const {
    BigInt s = 0;
    for (const auto& [e, c] : monomials) s += c * pow(x, e[0]) * pow(y, e[1]) * pow(z, e[2]);
    return s;
}

std::uint64_t count_quartic(const PlaneQuarticSpec& Q, std::uint64_t p) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    if (Q.is_bad(p)) throw BadReduction(p, Q.label);
    if (p >= (1ULL << 20)) throw PreconditionError("count_quartic: p too large for a quadratic scan");

    struct Term {
        std::uint64_t c;
        PlaneQuarticSpec::Exponents e;
    };
    std::vector<Term> terms;
    for (const auto& [e, c] : Q.monomials) {
        const auto r = mod_u64(c, p);
        if (r) terms.push_back({r, e});
    }
    // pw[k][x] = x^k mod p
    std::array<std::vector<std::uint64_t>, 5> pw;
    for (auto& v : pw) v.resize(p);
    for (std::uint64_t x = 0; x < p; ++x) {
        pw[0][x] = 1;
        for (int k = 1; k <= 4; ++k) pw[k][x] = pw[k - 1][x] * x % p;
    }
    auto F = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        std::uint64_t s = 0;
        for (const auto& t : terms) s = (s + t.c * (pw[t.e[0]][x] * pw[t.e[1]][y] % p * pw[t.e[2]][z] % p)) % p;
        return s;
    };

    std::uint64_t n = 0;
    for (std::uint64_t x = 0; x < p; ++x)
        for (std::uint64_t y = 0; y < p; ++y)
            if (F(x, y, 1) == 0) ++n;
    for (std::uint64_t x = 0; x < p; ++x)
        if (F(x, 1, 0) == 0) ++n;
    if (F(1, 0, 0) == 0) ++n;
    return n;
}

}  // namespace artin
