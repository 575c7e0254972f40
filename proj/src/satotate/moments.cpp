#include "artin/satotate/moments.hpp"

#include <algorithm>
#include <cmath>

#include "artin/arith/numtheory.hpp"
#include "artin/error.hpp"
#include "artin/util/parallel.hpp"

namespace artin {

namespace {

// (1/|G|) sum over elements of f(t(sigma))
template <class F>
Rational element_average(const GroupTable& G, const ClassFunction& t, F&& f) {
    if (!G.sizes_trusted) throw PreconditionError(G.id + ": moments need trusted class sizes");
    BigInt total = 0;
    for (std::size_t c = 0; c < G.classes.size(); ++c) {
        const auto v = t[c].to_integer();
        if (!v) throw PreconditionError(G.id + ": trace character is not integer valued");
        total += G.classes[c].size * f(*v);
    }
    Rational r(total, BigInt(G.order));
    r.canonicalize();
    return r;
}

BigInt ipow(const BigInt& b, unsigned e) {
    BigInt r = 1;
    for (unsigned k = 0; k < e; ++k) r *= b;
    return r;
}

struct Moments {
    double mean = 0, se = 0;
};

Moments mean_and_se(const std::vector<double>& x) {
    Moments m;
    if (x.empty()) return m;
    double s = 0;
    for (double v : x) s += v;
    m.mean = s / static_cast<double>(x.size());
    if (x.size() > 1) {
        double q = 0;
        for (double v : x) q += (v - m.mean) * (v - m.mean);
        m.se = std::sqrt(q / static_cast<double>(x.size() - 1) / static_cast<double>(x.size()));
    }
    return m;
}

void finish(MomentReport& r, const std::vector<double>& values) {
    const Moments m = mean_and_se(values);
    r.empirical = m.mean;
    r.stderr_ = m.se;
    r.n_primes = values.size();
    r.tolerance = std::max(kMinTolerance, 3 * m.se);
    r.pass = std::fabs(m.mean - r.theoretical.get_d()) <= r.tolerance;
}

}  // namespace

Rational theoretical_moment(const GroupTable& G, const ClassFunction& t, int i, unsigned n) {
    if (i < 1 || i > 3) throw PreconditionError("moment coefficient must be 1, 2 or 3");
    if (i == 2) {
        Rational sum = 0;
        for (unsigned j = 0; j <= n; ++j) {
            const Rational inner = element_average(G, t, [&](const BigInt& v) -> BigInt { return ipow(v, n) * ipow(v - 2, n - j); });
            sum += Rational(binomial(n, j) * catalan(j)) * inner;
        }
        sum.canonicalize();
        return sum;
    }
    if (n % 2 == 1) return 0;
    const unsigned h = n / 2;
    if (i == 1) {
        Rational r = element_average(G, t, [&](const BigInt& v) -> BigInt { return ipow(v, n); }) * Rational(catalan(h));
        r.canonicalize();
        return r;
    }
    Rational sum = 0;
    for (unsigned j = 0; j <= n; ++j) {
        const Rational inner = element_average(G, t, [&](const BigInt& v) -> BigInt { return ipow(v * v - 3, n - j); });
        sum += Rational(binomial(n, j) * catalan(j + h)) * inner;
    }
    sum.canonicalize();
    return sum;
}

std::vector<PrimeSample> collect_samples(const EllipticCurveSpec& E, const S4Field& F, const GroupTable& G,
                                         const ClassFunction& t, const SampleOptions& opt) {
    if (opt.bound < 1000) throw PreconditionError("moment prime bound must be at least 1000");
    std::vector<long> tv;
    for (const auto& v : t.values()) {
        const auto x = v.to_integer();
        if (!x) throw PreconditionError("trace character is not integer valued");
        tv.push_back(x->get_si());
    }
    const auto primes = primes_in(5, opt.bound);
    const auto got = parallel_map(primes, opt.workers, [&](std::uint64_t p) -> std::optional<PrimeSample> {
        if (E.is_bad(p) || F.is_ramified(p)) return std::nullopt;
        PrimeSample s{p, ap(E, p), tv[G.class_index(frobenius_class(F, p).cls)]};
        if (s.a == 0 && !opt.include_supersingular) return std::nullopt;
        return s;
    });
    std::vector<PrimeSample> out;
    for (const auto& s : got)
        if (s) out.push_back(*s);
    return out;
}

double abar_coefficient(int i, const PrimeSample& s) {
    const double ab = static_cast<double>(s.a) / std::sqrt(static_cast<double>(s.p));
    const double t = static_cast<double>(s.t);
    switch (i) {
        case 0:
            return 1;
        case 1:
            return ab * t;
        case 2:
            return t * (ab * ab - 2 + t);
        case 3:
            return ab * (ab * ab + t * t - 3);
        default:
            throw PreconditionError("moment coefficient must be 0, 1, 2 or 3");
    }
}

MomentReport empirical_moment(const GroupTable& G, const ClassFunction& t, int i, unsigned n,
                              const std::vector<PrimeSample>& samples) {
    if (samples.size() < kMinSamples)
        throw PreconditionError("only " + std::to_string(samples.size()) + " usable primes, need " +
                                std::to_string(kMinSamples));
    MomentReport r;
    r.quantity = "abar" + std::to_string(i);
    r.coefficient = i;
    r.order = n;
    r.theoretical = theoretical_moment(G, t, i, n);
    std::vector<double> v;
    v.reserve(samples.size());
    for (const auto& s : samples) v.push_back(std::pow(abar_coefficient(i, s), static_cast<int>(n)));
    finish(r, v);
    return r;
}

MomentReport catalan_moment_check(const EllipticCurveSpec& E, unsigned n, std::uint64_t bound, unsigned workers) {
    if (has_cm(E)) throw PreconditionError(E.label + " has complex multiplication");
    if (bound < 1000) throw PreconditionError("moment prime bound must be at least 1000");
    std::vector<std::uint64_t> good;
    for (auto p : primes_in(5, bound))
        if (!E.is_bad(p)) good.push_back(p);
    if (good.size() < kMinSamples) throw PreconditionError("too few good primes");
    const auto a = ap_many(E, good, workers);
    MomentReport r;
    r.quantity = "abar";
    r.coefficient = 0;
    r.order = 2 * n;
    r.theoretical = Rational(catalan(n));
    std::vector<double> v;
    v.reserve(good.size());
    for (std::size_t k = 0; k < good.size(); ++k)
        v.push_back(std::pow(static_cast<double>(a[k]) / std::sqrt(static_cast<double>(good[k])), static_cast<int>(2 * n)));
    finish(r, v);
    return r;
}

}  // namespace artin
