#include "artin/curves/elliptic.hpp"

#include <mutex>

#include "artin/arith/fq.hpp"
#include "artin/arith/numtheory.hpp"
#include "artin/error.hpp"
#include "artin/util/parallel.hpp"

namespace artin {

BigInt EllipticCurveSpec::b2() const { return a[0] * a[0] + 4 * a[1]; }
BigInt EllipticCurveSpec::b4() const { return 2 * a[3] + a[0] * a[2]; }
BigInt EllipticCurveSpec::b6() const { return a[2] * a[2] + 4 * a[4]; }
BigInt EllipticCurveSpec::b8() const {
    return a[0] * a[0] * a[4] + 4 * a[1] * a[4] - a[0] * a[2] * a[3] + a[1] * a[2] * a[2] - a[3] * a[3];
}
BigInt EllipticCurveSpec::c4() const { return b2() * b2() - 24 * b4(); }
BigInt EllipticCurveSpec::c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
BigInt EllipticCurveSpec::discriminant() const {
    const BigInt B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

bool EllipticCurveSpec::is_bad(std::uint64_t p) const {
    if (conductor && mod_u64(*conductor, p) == 0) return true;
    return mod_u64(discriminant(), p) == 0;
}

void EllipticCurveSpec::validate() const {
    const BigInt disc = discriminant();
    if (disc == 0) throw PreconditionError(label + ": singular model (discriminant 0)");
    if (conductor) {
        if (*conductor <= 0) throw PreconditionError(label + ": conductor must be positive");
        for (const auto& q : prime_divisors(*conductor)) {
            if (disc % q != 0) {
                throw PreconditionError(label + ": conductor prime " + q.get_str() + " does not divide the discriminant " +
                                        disc.get_str());
            }
        }
    }
}

ShortWeierstrass short_model(const EllipticCurveSpec& E) { return {-27 * E.c4(), -54 * E.c6()}; }

namespace {

void require_good(const EllipticCurveSpec& E, std::uint64_t p) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    if (E.is_bad(p)) throw BadReduction(p, E.label);
}

// sq[x] = Legendre symbol (x|p)
std::vector<std::int8_t> legendre_table(std::uint64_t p) {
    std::vector<std::int8_t> sq(p, -1);
    sq[0] = 0;
    std::uint64_t s = 0;
    for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) {
        s += 2 * x - 1;
        s %= p;
        sq[s] = 1;
    }
    return sq;
}

long ap_unchecked(const ShortWeierstrass& W, std::uint64_t p) {
    const auto sq = legendre_table(p);
    // f(x) = x^3 + Ax + B stepped by finite differences
    std::uint64_t v = mod_u64(W.B, p);
    std::uint64_t d1 = (1 + mod_u64(W.A, p)) % p;
    std::uint64_t d2 = 6 % p;
    const std::uint64_t d3 = 6 % p;
    long sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        sum += sq[v];
        v += d1;
        if (v >= p) v -= p;
        d1 += d2;
        if (d1 >= p) d1 -= p;
        d2 += d3;
        if (d2 >= p) d2 -= p;
    }
    return -sum;
}

}  // namespace

long ap(const EllipticCurveSpec& E, std::uint64_t p) {
    if (p <= 3) throw PreconditionError("ap needs p > 3 (got " + std::to_string(p) + ")");
    if (p >= (1ULL << 32)) throw PreconditionError("ap: prime too large for a dense table");
    require_good(E, p);
    const long a = ap_unchecked(short_model(E), p);
    if (static_cast<unsigned long>(a * a) > 4 * p) {
        throw InternalError("Hasse bound violated for " + E.label + " at p = " + std::to_string(p));
    }
    return a;
}

std::vector<long> ap_many(const EllipticCurveSpec& E, const std::vector<std::uint64_t>& primes, unsigned workers) {
    return parallel_map(primes, workers, [&](std::uint64_t p) { return ap(E, p); });
}

long ApCache::get(const EllipticCurveSpec& E, std::uint64_t p) {
    Key k{E.label, p};
    {
        std::shared_lock lk(mu_);
        auto it = memo_.find(k);
        if (it != memo_.end()) return it->second;
    }
    const long a = ap(E, p);
    std::unique_lock lk(mu_);
    memo_.emplace(std::move(k), a);
    return a;
}

std::size_t ApCache::size() const {
    std::shared_lock lk(mu_);
    return memo_.size();
}

BigInt count_points_ext(const EllipticCurveSpec& E, std::uint64_t p, unsigned r, CountMode mode) {
    if (r == 0) throw PreconditionError("extension degree must be positive");
    require_good(E, p);
    if (mode == CountMode::formula) {
        const BigInt P = from_u64(p);
        return 1 + pow(P, r) - power_sum(BigInt(ap(E, p)), P, static_cast<long>(r));
    }

    if (p == 2) throw PreconditionError("enumerate mode needs odd p");
    BigInt qq = pow(from_u64(p), r);
    if (qq > kMaxEnumerateField) {
        throw PreconditionError("enumeration over F_" + qq.get_str() + " exceeds the limit " +
                                std::to_string(kMaxEnumerateField));
    }
    const Fq F(p, r);
    const std::uint64_t q = F.order();
    std::vector<std::int8_t> chi(q, -1);
    chi[0] = 0;
    for (std::uint64_t i = 1; i < q; ++i) {
        const auto y = F.from_index(i);
        chi[F.index(F.mul(y, y))] = 1;
    }
    std::array<Fq::Elem, 5> c;
    for (int i = 0; i < 5; ++i) c[i] = F.from_int(static_cast<std::int64_t>(mod_u64(E.a[i], p)));
    const auto four = F.from_int(4);

    // y^2 + h y = g has 1 + chi(h^2 + 4g) solutions
    BigInt count = 1;
    long total = 0;
    for (std::uint64_t i = 0; i < q; ++i) {
        const auto x = F.from_index(i);
        const auto h = F.add(F.mul(c[0], x), c[2]);
        auto g = F.add(F.mul(F.add(F.mul(F.add(x, c[1]), x), c[3]), x), c[4]);
        const auto disc = F.add(F.mul(h, h), F.mul(four, g));
        total += 1 + chi[F.index(disc)];
    }
    count += total;
    return count;
}

EllipticCurveSpec quadratic_twist(const EllipticCurveSpec& E, const BigInt& d) {
    if (d == 0) throw PreconditionError("twist parameter d must be nonzero");
    if (!is_squarefree(d)) throw PreconditionError("twist parameter " + d.get_str() + " is not squarefree");
    const ShortWeierstrass W = short_model(E);
    EllipticCurveSpec T;
    T.label = E.label + "^(" + d.get_str() + ")";
    T.a = {BigInt(0), BigInt(0), BigInt(0), W.A * d * d, W.B * d * d * d};
    return T;
}

LocalFactor local_factor(const EllipticCurveSpec& E, std::uint64_t p) {
    return LocalFactor(E.label, p, 1, elliptic_poly(BigInt(ap(E, p)), p));
}

Rational j_invariant(const EllipticCurveSpec& E) {
    Rational j(E.c4() * E.c4() * E.c4(), E.discriminant());
    j.canonicalize();
    return j;
}

bool has_cm(const EllipticCurveSpec& E) {
    static const char* const cm_j[] = {"0",         "1728",          "-3375",          "8000",
                                       "-32768",    "54000",         "287496",         "-884736",
                                       "-12288000", "16581375",      "-884736000",     "-147197952000",
                                       "-262537412640768000"};
    const Rational j = j_invariant(E);
    if (j.get_den() != 1) return false;
    for (const char* s : cm_j)
        if (j.get_num() == BigInt(s)) return true;
    return false;
}

}  // namespace artin
