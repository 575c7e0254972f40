#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "artin/arith/bigint.hpp"
#include "artin/error.hpp"

namespace artin {

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        throw InternalError("exact_div: " + a.get_str() + " is not divisible by " + b.get_str());
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

template <class R>
class Poly;
template <class R>
bool is_zero(const Poly<R>& p);

/// Dense univariate polynomial, coefficients stored from the constant term up.
/// The coefficient vector never carries trailing zeros, so the zero polynomial is empty.
template <class R>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<R> c) : c_(c) { trim(); }
    explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }
    explicit Poly(const R& constant) : c_{constant} { trim(); }

    static Poly monomial(const R& coeff, std::size_t k) {
        std::vector<R> c(k + 1);
        c[k] = coeff;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }

    R operator[](std::size_t i) const { return i < c_.size() ? c_[i] : R{}; }
    const R& lead() const {
        if (c_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (zero_coeff(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const R& s, Poly a) {
        for (auto& x : a.c_) x = s * x;
        a.trim();
        return a;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    R eval(const R& x) const {
        R acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<R> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = R(static_cast<long>(i)) * c_[i];
        return Poly(std::move(d));
    }

    /// x^n f(1/x); n defaults to deg f.
    Poly reversed(int n = -2) const {
        if (n == -2) n = degree();
        if (n < degree()) throw PreconditionError("reversed: n smaller than the degree");
        std::vector<R> r(static_cast<std::size_t>(n + 1));
        for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(n) - i] = c_[i];
        return Poly(std::move(r));
    }

    /// f(x^k)
    Poly inflate_variable(unsigned k) const {
        if (c_.empty()) return {};
        std::vector<R> r((c_.size() - 1) * k + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
        return Poly(std::move(r));
    }

private:
    static bool zero_coeff(const R& x) {
        using artin::is_zero;
        return is_zero(x);
    }
    void trim() {
        while (!c_.empty() && zero_coeff(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
    return p.is_zero();
}

template <class R>
R ring_pow(const R& base, unsigned long e) {
    R r(1L), b = base;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

template <class R>
Poly<R> ring_pow(const Poly<R>& base, unsigned long e) {
    Poly<R> r{R(1L)}, b = base;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

/// Division of polynomials known to divide exactly over R; throws InternalError otherwise.
template <class R>
Poly<R> exact_div(Poly<R> a, const Poly<R>& b) {
    if (b.is_zero()) throw PreconditionError("exact_div by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw InternalError("exact_div: divisor degree exceeds dividend degree");
    std::vector<R> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    while (!a.is_zero()) {
        if (a.degree() < b.degree()) throw InternalError("exact_div: nonzero remainder");
        const std::size_t k = static_cast<std::size_t>(a.degree() - b.degree());
        R c = exact_div(a.lead(), b.lead());
        a -= Poly<R>::monomial(c, k) * b;
        q[k] = std::move(c);
    }
    return Poly<R>(std::move(q));
}

template <class R>
Poly<R> exact_div_scalar(const Poly<R>& a, const R& s) {
    std::vector<R> c = a.coeffs();
    for (auto& x : c) x = exact_div(x, s);
    return Poly<R>(std::move(c));
}

/// lc(b)^(deg a - deg b + 1) * a mod b.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw PreconditionError("pseudo_remainder by the zero polynomial");
    if (a.degree() < b.degree()) return a;
    Poly<R> r = a;
    const Poly<R> lb{b.lead()};
    int e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Poly<R> s = Poly<R>::monomial(r.lead(), static_cast<std::size_t>(r.degree() - b.degree()));
        r = lb * r - s * b;
        --e;
    }
    return ring_pow(b.lead(), static_cast<unsigned long>(e)) * r;
}

/// Resultant over an integral domain R by the subresultant pseudo-remainder sequence.
/// R needs exact division (`exact_div(R, R)`).
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
    if (a.is_zero() || b.is_zero()) return R{};
    R g(1L), h(1L);
    long s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    }
    while (b.degree() > 0) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        Poly<R> r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return R{};
        b = exact_div_scalar(r, R(g * ring_pow(h, static_cast<unsigned long>(delta))));
        g = a.lead();
        if (delta == 0) {
            // h stays
        } else {
            h = exact_div(R(ring_pow(g, static_cast<unsigned long>(delta))),
                          R(ring_pow(h, static_cast<unsigned long>(delta - 1))));
        }
    }
    // deg b == 0
    const unsigned long da = static_cast<unsigned long>(a.degree());
    if (da == 0) return R(1L);
    R res = exact_div(R(ring_pow(b.lead(), da)), R(ring_pow(h, da - 1)));
    return s < 0 ? R(-res) : res;
}

}  // namespace artin
