#include "artin/arith/cyclo.hpp"

#include <array>
#include <mutex>
#include <numeric>
#include <sstream>

#include "artin/arith/numtheory.hpp"
#include "artin/arith/poly.hpp"
#include "artin/error.hpp"

namespace artin {

namespace {

std::vector<BigInt> compute_cyclotomic(unsigned m) {
    // x^m - 1 divided by Phi_d for every proper divisor d of m
    Poly<BigInt> num = Poly<BigInt>::monomial(1, m) - Poly<BigInt>{1};
    for (unsigned d = 1; d < m; ++d) {
        if (m % d == 0) num = exact_div(num, Poly<BigInt>(cyclotomic_polynomial(d)));
    }
    return num.coeffs();
}

constexpr unsigned kCacheLimit = 256;

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw PreconditionError("cyclotomic polynomial of conductor 0");
    if (m >= kCacheLimit) throw PreconditionError("conductor " + std::to_string(m) + " unsupported");
    // written once per conductor, read-only afterwards
    static std::array<std::vector<BigInt>, kCacheLimit> cache;
    static std::array<std::once_flag, kCacheLimit> once;
    std::call_once(once[m], [m] { cache[m] = compute_cyclotomic(m); });
    return cache[m];
}

CycloInt CycloInt::from_exponents(unsigned m, const std::vector<BigInt>& c) {
    if (m == 0) throw PreconditionError("conductor 0");
    std::vector<BigInt> folded(m);
    for (std::size_t k = 0; k < c.size(); ++k) folded[k % m] += c[k];
    const auto& phi = cyclotomic_polynomial(m);
    const std::size_t d = phi.size() - 1;
    // Phi_m is monic: reduce from the top
    for (std::size_t k = folded.size(); k-- > d;) {
        if (folded[k] == 0) continue;
        const BigInt t = folded[k];
        for (std::size_t j = 0; j <= d; ++j) folded[k - d + j] -= t * phi[j];
    }
    folded.resize(d);
    return CycloInt(m, std::move(folded));
}

CycloInt CycloInt::from_coeffs(unsigned m, std::vector<BigInt> c) {
    if (c.size() != euler_phi(m)) {
        throw PreconditionError("cyclotomic literal for m = " + std::to_string(m) + " needs " +
                                std::to_string(euler_phi(m)) + " coefficients, got " + std::to_string(c.size()));
    }
    return CycloInt(m, std::move(c));
}

CycloInt CycloInt::zeta(unsigned m, long k) {
    if (m == 0) throw PreconditionError("conductor 0");
    const long mm = static_cast<long>(m);
    const long e = ((k % mm) + mm) % mm;
    std::vector<BigInt> c(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] = 1;
    return from_exponents(m, c);
}

bool CycloInt::is_zero() const {
    for (const auto& x : c_) {
        if (x != 0) return false;
    }
    return true;
}

std::optional<BigInt> CycloInt::to_integer() const {
    for (std::size_t k = 1; k < c_.size(); ++k) {
        if (c_[k] != 0) return std::nullopt;
    }
    return c_.empty() ? BigInt(0) : c_[0];
}

CycloInt CycloInt::embed(unsigned M) const {
    if (M == m_) return *this;
    if (M == 0 || M % m_ != 0) {
        throw PreconditionError("cannot embed conductor " + std::to_string(m_) + " into " + std::to_string(M));
    }
    const unsigned step = M / m_;
    std::vector<BigInt> c(static_cast<std::size_t>(step) * (c_.size() ? c_.size() - 1 : 0) + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) c[k * step] = c_[k];
    return from_exponents(M, c);
}

CycloInt CycloInt::galois(long k) const {
    const long mm = static_cast<long>(m_);
    const long kk = ((k % mm) + mm) % mm;
    if (std::gcd(kk, mm) != 1) throw PreconditionError("galois: exponent not a unit modulo the conductor");
    std::vector<BigInt> c(m_);
    for (std::size_t j = 0; j < c_.size(); ++j) c[static_cast<std::size_t>((static_cast<long>(j) * kk) % mm)] += c_[j];
    return from_exponents(m_, c);
}

BigInt CycloInt::trace() const {
    CycloInt acc(0L);
    for (unsigned k = 1; k <= m_; ++k) {
        if (std::gcd(k, m_) == 1) acc += galois(static_cast<long>(k));
    }
    auto v = acc.to_integer();
    if (!v) throw InternalError("trace is not rational");
    return *v;
}

CycloInt CycloInt::operator-() const {
    CycloInt r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloInt& CycloInt::operator+=(const CycloInt& o) {
    if (o.m_ != m_) {
        const unsigned M = std::lcm(m_, o.m_);
        *this = embed(M);
        CycloInt b = o.embed(M);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += b.c_[k];
        return *this;
    }
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& o) { return *this += -o; }

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
    if (a.m_ != b.m_) {
        const unsigned M = std::lcm(a.m_, b.m_);
        return a.embed(M) * b.embed(M);
    }
    if (a.m_ == 1) return CycloInt(a.c_[0] * b.c_[0]);
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return CycloInt::from_exponents(a.m_, c);
}

bool operator==(const CycloInt& a, const CycloInt& b) {
    if (a.m_ == b.m_) return a.c_ == b.c_;
    const unsigned M = std::lcm(a.m_, b.m_);
    return a.embed(M).c_ == b.embed(M).c_;
}

std::string CycloInt::to_string() const {
    if (auto v = to_integer()) return v->get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << (c_[k] < 0 ? " - " : " + ");
        else if (c_[k] < 0) os << "-";
        first = false;
        BigInt mag = abs(c_[k]);
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "z" << m_;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

CycloInt cyclo_arith(CycloOp op, const CycloInt& a, const CycloInt& b, bool allow_embed) {
    const bool binary = op == CycloOp::add || op == CycloOp::mul;
    if (binary && !allow_embed && a.conductor() != b.conductor()) {
        throw PreconditionError("conductor mismatch: " + std::to_string(a.conductor()) + " vs " +
                                std::to_string(b.conductor()));
    }
    switch (op) {
        case CycloOp::add: return a + b;
        case CycloOp::mul: return a * b;
        case CycloOp::conj: return a.conj();
        case CycloOp::eval_trace: return CycloInt(a.trace());
    }
    throw PreconditionError("unknown cyclotomic operation");
}

}  // namespace artin
