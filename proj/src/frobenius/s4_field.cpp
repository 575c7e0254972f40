#include "artin/frobenius/s4_field.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "artin/arith/fp_poly.hpp"
#include "artin/arith/numtheory.hpp"
#include "artin/error.hpp"

namespace artin {

IntPoly resolvent_cubic(long a, long b, long c, long d) {
    const BigInt A = a, B = b, C = c, D = d;
    return IntPoly{-(A * A * D - 4 * B * D + C * C), A * C - 4 * D, -B, BigInt(1)};
}

namespace {

BigInt squarefree_part(const BigInt& n) {
    BigInt m = abs(n), k = sgn(n);
    for (const auto& q : prime_divisors(m)) {
        int e = 0;
        while (m % q == 0) m /= q, ++e;
        if (e & 1) k *= q;
    }
    return k;
}

bool has_integer_root(const IntPoly& f) {
    BigInt bound = 0;
    for (const auto& c : f.coeffs()) bound = std::max(bound, BigInt(abs(c)));
    bound += 1;
    for (BigInt x = -bound; x <= bound; ++x)
        if (f.eval(x) == 0) return true;
    return false;
}

bool irreducible_mod_some_prime(const IntPoly& f, const BigInt& disc) {
    for (auto p : primes_in(2, 100)) {
        if (mod_u64(disc, p) == 0) continue;
        if (degree_pattern(f, p).size() == 1) return true;
    }
    return false;
}

}  // namespace

S4Field S4Field::from_coeffs(long a, long b, long c, long d) {
    S4Field F;
    F.abcd_ = {a, b, c, d};
    F.f_ = IntPoly{BigInt(d), BigInt(c), BigInt(b), BigInt(a), BigInt(1)};
    F.res_ = resolvent_cubic(a, b, c, d);
    F.disc_ = artin::discriminant(F.f_);
    const std::string name = F.to_string();
    if (F.disc_ == 0) throw PreconditionError(name + ": discriminant is zero");
    if (artin::discriminant(F.res_) != F.disc_) throw InternalError(name + ": resolvent discriminant mismatch");
    if (is_square(F.disc_)) throw PreconditionError(name + ": discriminant is a square");
    if (!irreducible_mod_some_prime(F.f_, F.disc_)) throw PreconditionError(name + ": no irreducibility witness below 100");
    if (has_integer_root(F.res_)) throw PreconditionError(name + ": resolvent cubic has a rational root");
    F.kernel_ = squarefree_part(F.disc_);
    if (F.kernel_ != -3) throw PreconditionError(name + ": discriminant is not -3 times a square");
    F.bad_ = prime_divisors(F.disc_);
    return F;
}

std::string S4Field::coeff_string() const {
    return std::to_string(abcd_[0]) + "," + std::to_string(abcd_[1]) + "," + std::to_string(abcd_[2]) + "," +
           std::to_string(abcd_[3]);
}

std::string class_of_pattern(const std::vector<int>& pattern) {
    std::vector<int> s = pattern;
    std::sort(s.begin(), s.end());
    if (s == std::vector<int>{1, 1, 1, 1}) return "1a";
    if (s == std::vector<int>{2, 2}) return "2a";
    if (s == std::vector<int>{1, 1, 2}) return "2b";
    if (s == std::vector<int>{1, 3}) return "3a";
    if (s == std::vector<int>{4}) return "4a";
    throw InconsistentData("degree pattern is not a cycle type of S4");
}

FrobeniusDatum frobenius_class(const S4Field& F, std::uint64_t p) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    if (F.is_ramified(p)) throw RamifiedPrime(p);
    FrobeniusDatum D;
    D.p = p;
    D.quartic_pattern = degree_pattern(F.quartic(), p);
    D.cubic_pattern = degree_pattern(F.resolvent(), p);
    D.cls = class_of_pattern(D.quartic_pattern);
    D.f_L4 = *std::max_element(D.quartic_pattern.begin(), D.quartic_pattern.end());
    D.f_L3 = *std::max_element(D.cubic_pattern.begin(), D.cubic_pattern.end());
    D.f_Q3 = kronecker(-3, from_u64(p)) == 1 ? 1 : 2;

    static const std::map<std::string, std::vector<int>> cubic{
        {"1a", {1, 1, 1}}, {"2a", {1, 1, 1}}, {"2b", {1, 2}}, {"3a", {3}}, {"4a", {1, 2}}};
    const bool even = D.cls == "1a" || D.cls == "2a" || D.cls == "3a";
    if (D.cubic_pattern != cubic.at(D.cls) || (D.f_Q3 == 1) != even) {
        throw InconsistentData(F.to_string() + " at p = " + std::to_string(p) + ": class " + D.cls +
                               " disagrees with the resolvent pattern or (-3|p)");
    }
    return D;
}

std::vector<std::vector<int>> cubic_fingerprint(const S4Field& F, const BigInt& avoid, std::size_t count) {
    std::vector<std::vector<int>> fp;
    for (std::uint64_t p = 2; fp.size() < count; ++p) {
        if (!is_prime(p) || mod_u64(avoid, p) == 0 || F.is_ramified(p)) continue;
        fp.push_back(degree_pattern(F.resolvent(), p));
    }
    return fp;
}

bool same_cubic_field(const S4Field& F, const S4Field& G, std::size_t count) {
    const BigInt avoid = F.discriminant() * G.discriminant();
    return cubic_fingerprint(F, avoid, count) == cubic_fingerprint(G, avoid, count);
}

S4Field find_s4_quartic(long H, const std::vector<S4Field>& exclude) {
    if (H < 2) throw PreconditionError("height bound must be at least 2");
    std::vector<std::tuple<long, long, long, long, long>> order;
    for (long a = -H; a <= H; ++a)
        for (long b = -H; b <= H; ++b)
            for (long c = -H; c <= H; ++c)
                for (long d = -H; d <= H; ++d)
                    order.emplace_back(std::labs(a) + std::labs(b) + std::labs(c) + std::labs(d), a, b, c, d);
    std::sort(order.begin(), order.end());
    for (const auto& [h, a, b, c, d] : order) {
        // cheap filter before the certificates
        const BigInt disc = discriminant(IntPoly{BigInt(d), BigInt(c), BigInt(b), BigInt(a), BigInt(1)});
        if (disc >= 0 || disc % 3 != 0 || !is_square(disc / -3)) continue;
        S4Field F;
        try {
            F = S4Field::from_coeffs(a, b, c, d);
        } catch (const PreconditionError&) {
            continue;
        }
        bool excluded = false;
        for (const auto& X : exclude) excluded = excluded || same_cubic_field(F, X);
        if (!excluded) return F;
    }
    throw NotFound("no admissible S4 quartic with coefficients bounded by " + std::to_string(H));
}

std::map<std::string, long> class_frequencies(const S4Field& F, std::uint64_t lo, std::uint64_t hi) {
    std::map<std::string, long> n{{"1a", 0}, {"2a", 0}, {"2b", 0}, {"3a", 0}, {"4a", 0}};
    for (auto p : primes_in(lo, hi)) {
        if (F.is_ramified(p)) continue;
        ++n[frobenius_class(F, p).cls];
    }
    return n;
}

std::vector<std::string> joint_class(const GroupTable& G, const S4Field& F, const S4Field& Fp, std::uint64_t p,
                                     const std::string& proj_L, const std::string& proj_Lp) {
    const std::string x = frobenius_class(F, p).cls, y = frobenius_class(Fp, p).cls;
    const auto& PL = G.projection(proj_L);
    const auto& PLp = G.projection(proj_Lp);
    std::vector<std::string> out;
    for (const auto& C : G.classes)
        if (PL.map.at(C.label) == x && PLp.map.at(C.label) == y) out.push_back(C.label);
    if (out.empty()) {
        throw InconsistentData("no class of " + G.id + " projects to (" + x + ", " + y + ") at p = " + std::to_string(p));
    }
    return out;
}

}  // namespace artin
