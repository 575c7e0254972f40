#include "artin/arith/fq.hpp"

#include "artin/arith/numtheory.hpp"
#include "artin/error.hpp"

namespace artin {

FpPoly smallest_irreducible(std::uint64_t p, unsigned r) {
    if (r == 0) throw PreconditionError("extension degree must be positive");
    if (r == 1) return FpPoly(p, {0, 1});
    std::uint64_t count = 1;
    for (unsigned i = 0; i < r; ++i) {
        if (count > (UINT64_MAX / p)) throw PreconditionError("field too large to search");
        count *= p;
    }
    for (std::uint64_t n = 0; n < count; ++n) {
        // digits of n, most significant first, are c_{r-1}, ..., c_0
        std::vector<std::uint64_t> c(r + 1);
        c[r] = 1;
        std::uint64_t t = n;
        for (unsigned i = 0; i < r; ++i) {
            c[i] = t % p;
            t /= p;
        }
        FpPoly f(p, std::move(c));
        if (f[0] == 0) continue;
        if (is_irreducible(f)) return f;
    }
    throw InternalError("no irreducible polynomial found");
}

Fq::Fq(std::uint64_t p, unsigned r) : p_(p), r_(r), q_(1), modulus_(smallest_irreducible(p, r)) {
    if (!is_prime(p)) throw PreconditionError("Fq: characteristic must be prime");
    for (unsigned i = 0; i < r; ++i) q_ *= p;
    reduction_.assign(modulus_.coeffs().begin(), modulus_.coeffs().end() - 1);
}

Fq::Elem Fq::one() const {
    Elem e(r_, 0);
    e[0] = 1;
    return e;
}

Fq::Elem Fq::from_int(std::int64_t v) const {
    Elem e(r_, 0);
    const auto pp = static_cast<std::int64_t>(p_);
    e[0] = static_cast<std::uint64_t>(((v % pp) + pp) % pp);
    return e;
}

Fq::Elem Fq::from_index(std::uint64_t idx) const {
    Elem e(r_);
    for (unsigned i = 0; i < r_; ++i) {
        e[i] = idx % p_;
        idx /= p_;
    }
    return e;
}

std::uint64_t Fq::index(const Elem& a) const {
    std::uint64_t idx = 0;
    for (unsigned i = r_; i-- > 0;) idx = idx * p_ + a[i];
    return idx;
}

Fq::Elem Fq::add(const Elem& a, const Elem& b) const {
    Elem c(r_);
    for (unsigned i = 0; i < r_; ++i) c[i] = (a[i] + b[i]) % p_;
    return c;
}

Fq::Elem Fq::sub(const Elem& a, const Elem& b) const {
    Elem c(r_);
    for (unsigned i = 0; i < r_; ++i) c[i] = (a[i] + p_ - b[i]) % p_;
    return c;
}

Fq::Elem Fq::neg(const Elem& a) const { return sub(zero(), a); }

Fq::Elem Fq::mul(const Elem& a, const Elem& b) const {
    std::vector<std::uint64_t> t(2 * r_ - 1, 0);
    for (unsigned i = 0; i < r_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < r_; ++j) t[i + j] = (t[i + j] + mulmod(a[i], b[j], p_)) % p_;
    }
    for (std::size_t k = t.size(); k-- > r_;) {
        if (t[k] == 0) continue;
        const std::uint64_t c = t[k];
        for (unsigned j = 0; j < r_; ++j) t[k - r_ + j] = (t[k - r_ + j] + p_ - mulmod(c, reduction_[j], p_)) % p_;
        t[k] = 0;
    }
    t.resize(r_);
    return t;
}

Fq::Elem Fq::pow(Elem a, std::uint64_t e) const {
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return r;
}

bool Fq::is_zero(const Elem& a) const {
    for (auto x : a) {
        if (x != 0) return false;
    }
    return true;
}

Fq::Elem Fq::inv(const Elem& a) const {
    if (is_zero(a)) throw PreconditionError("Fq: inverse of zero");
    return pow(a, q_ - 2);
}

std::uint64_t Fq::multiplicative_order(const Elem& a) const {
    if (is_zero(a)) throw PreconditionError("Fq: order of zero");
    std::uint64_t n = q_ - 1;
    for (const auto& ell_big : prime_divisors(BigInt(from_u64(q_ - 1)))) {
        const std::uint64_t ell = ell_big.get_ui();
        while (n % ell == 0 && pow(a, n / ell) == one()) n /= ell;
    }
    return n;
}

}  // namespace artin
