#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/arith/bigint.hpp"
#include "artin/lfun/local_factor.hpp"

namespace artin {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
struct EllipticCurveSpec {
    std::string label;
    std::array<BigInt, 5> a;  // a1, a2, a3, a4, a6
    std::optional<BigInt> conductor;

    BigInt b2() const;
    BigInt b4() const;
    BigInt b6() const;
    BigInt b8() const;
    BigInt c4() const;
    BigInt c6() const;
    BigInt discriminant() const;

    /// p divides the conductor (when known) or the discriminant of this model.
    bool is_bad(std::uint64_t p) const;

    /// Throws PreconditionError when the discriminant vanishes or a prime of
    /// the conductor does not divide the discriminant.
    void validate() const;
};

/// y^2 = x^3 + A x + B
struct ShortWeierstrass {
    BigInt A, B;
};

/// y^2 = x^3 - 27 c4 x - 54 c6, isomorphic to E over Z[1/6].
ShortWeierstrass short_model(const EllipticCurveSpec& E);

/// Trace of Frobenius p + 1 - #E(F_p) by one pass over x with a square table.
/// p <= 3 raises PreconditionError, bad p raises BadReduction.
long ap(const EllipticCurveSpec& E, std::uint64_t p);

/// a_p for every prime in `primes` (all must be good), in input order.
std::vector<long> ap_many(const EllipticCurveSpec& E, const std::vector<std::uint64_t>& primes, unsigned workers = 0);

/// Memo table (label, p) -> a_p; concurrent readers, exclusive writers.
class ApCache {
public:
    long get(const EllipticCurveSpec& E, std::uint64_t p);
    std::size_t size() const;

private:
    struct Key {
        std::string label;
        std::uint64_t p;
        bool operator==(const Key& o) const { return p == o.p && label == o.label; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return std::hash<std::string>()(k.label) ^ (std::hash<std::uint64_t>()(k.p) * 0x9e3779b97f4a7c15ULL);
        }
    };
    mutable std::shared_mutex mu_;
    std::unordered_map<Key, long, KeyHash> memo_;
};

enum class CountMode { formula, enumerate };

/// Largest field size accepted by the enumerate mode.
inline constexpr std::uint64_t kMaxEnumerateField = 1'000'000;

/// #E(F_{p^r}). The formula mode uses 1 + p^r - s_r(a_p); the enumerate mode walks
/// F_{p^r} on the given long Weierstrass model (odd p only).
BigInt count_points_ext(const EllipticCurveSpec& E, std::uint64_t p, unsigned r, CountMode mode);

/// y^2 = x^3 + A d^2 x + B d^3 on the short model; d squarefree and nonzero.
EllipticCurveSpec quadratic_twist(const EllipticCurveSpec& E, const BigInt& d);

/// c4^3 / Delta
Rational j_invariant(const EllipticCurveSpec& E);
/// j is one of the thirteen rational CM j-invariants.
bool has_cm(const EllipticCurveSpec& E);

/// 1 - a_p T + p T^2
LocalFactor local_factor(const EllipticCurveSpec& E, std::uint64_t p);

}  // namespace artin
