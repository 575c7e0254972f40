#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artin/arith/bigint.hpp"
#include "artin/chars/group_table.hpp"
#include "artin/curves/elliptic.hpp"
#include "artin/frobenius/s4_field.hpp"

namespace artin {

/// Exact M_n(abar_i) for i in {1, 2, 3}, with t the trace character (chi4) on a table with
/// trusted sizes; sums over group elements. Odd n is 0 for i = 1, 3.
Rational theoretical_moment(const GroupTable& G, const ClassFunction& t, int i, unsigned n);

/// One good unramified prime: a_p of the elliptic curve and t = chi(Frob_p).
struct PrimeSample {
    std::uint64_t p = 0;
    long a = 0;
    long t = 0;
};

struct SampleOptions {
    std::uint64_t bound = 100000;
    bool include_supersingular = true;
    unsigned workers = 0;
};

/// Samples for 5 <= p <= bound in increasing p; a = 0 primes dropped unless included.
std::vector<PrimeSample> collect_samples(const EllipticCurveSpec& E, const S4Field& F, const GroupTable& G,
                                         const ClassFunction& t, const SampleOptions& opt);

/// abar_i(p) from abar = a / sqrt(p); i = 0 is the constant 1.
double abar_coefficient(int i, const PrimeSample& s);

struct MomentReport {
    std::string quantity;  // "abar1", "abar2", "abar3" or "abar"
    int coefficient = 1;  // 0 for the elliptic trace itself
    unsigned order = 0;
    Rational theoretical;
    double empirical = 0;
    double stderr_ = 0;
    std::size_t n_primes = 0;
    double tolerance = 0;
    bool pass = false;
};

inline constexpr std::size_t kMinSamples = 100;
inline constexpr double kMinTolerance = 0.1;

/// Mean of abar_i^n over the samples against the closed form; the tolerance is
/// max(0.1, 3 standard errors). PreconditionError with fewer than 100 samples.
MomentReport empirical_moment(const GroupTable& G, const ClassFunction& t, int i, unsigned n,
                              const std::vector<PrimeSample>& samples);

/// Mean of abar^(2n) over good primes p <= bound of a non-CM curve against c_n.
MomentReport catalan_moment_check(const EllipticCurveSpec& E, unsigned n, std::uint64_t bound, unsigned workers = 0);

}  // namespace artin
