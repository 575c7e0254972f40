#include "artin/arith/fp_poly.hpp"

#include <algorithm>

#include "artin/arith/numtheory.hpp"
#include "artin/error.hpp"

namespace artin {

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> c) : p_(p), c_(std::move(c)) {
    for (auto& x : c_) x %= p_;
    trim();
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::reduce(const IntPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(mod_u64(x, p));
    return FpPoly(p, std::move(c));
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    const std::uint64_t inv = artin::powmod(c_.back(), p_ - 2, p_);
    std::vector<std::uint64_t> c = c_;
    for (auto& x : c) x = mulmod(x, inv, p_);
    return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::derivative() const {
    if (c_.size() <= 1) return FpPoly(p_, {});
    std::vector<std::uint64_t> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = mulmod(c_[i], i % p_, p_);
    return FpPoly(p_, std::move(c));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % a.p_;
    return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + a.p_ - b[i]) % a.p_;
    return FpPoly(a.p_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p_, {});
    std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
    return FpPoly(a.p_, std::move(c));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw PreconditionError("FpPoly division by zero");
    const std::uint64_t p = a.p_;
    if (a.degree() < b.degree()) return {FpPoly(p, {}), a};
    std::vector<std::uint64_t> r = a.c_;
    std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const std::uint64_t inv = artin::powmod(b.c_.back(), p - 2, p);
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0) continue;
        const std::uint64_t t = mulmod(r[k], inv, p);
        q[k - db] = t;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = (r[k - db + j] + p - mulmod(t, b.c_[j], p)) % p;
    }
    r.resize(db);
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
    FpPoly r(m.prime(), {1});
    r = r % m;
    FpPoly b = base % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return r;
}

bool is_squarefree(const FpPoly& f) {
    if (f.degree() < 1) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

std::vector<int> ddf_pattern(const FpPoly& f_in) {
    if (f_in.degree() < 1) return {};
    FpPoly f = f_in.monic();
    const std::uint64_t p = f.prime();
    std::vector<int> pattern;
    const FpPoly x = FpPoly::x(p);
    FpPoly h = x % f;
    for (int i = 1; 2 * i <= f.degree(); ++i) {
        h = powmod(h, p, f);
        FpPoly g = gcd(f, h - x);
        if (g.degree() > 0) {
            for (int k = 0; k < g.degree() / i; ++k) pattern.push_back(i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) pattern.push_back(f.degree());
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

std::vector<int> degree_pattern(const IntPoly& f, std::uint64_t p) {
    if (f.degree() < 1) throw PreconditionError("degree_pattern of a constant polynomial");
    if (mod_u64(f.lead(), p) == 0) throw RamifiedPrime(p);
    if (mod_u64(discriminant(f), p) == 0) throw RamifiedPrime(p);
    return ddf_pattern(FpPoly::reduce(f, p));
}

bool is_irreducible(const FpPoly& f) {
    if (f.degree() < 1) return false;
    if (!is_squarefree(f)) return false;
    auto pat = ddf_pattern(f);
    return pat.size() == 1;
}

}  // namespace artin
