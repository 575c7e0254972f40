#include "artin/arith/intpoly.hpp"

#include <sstream>

namespace artin {

BigInt discriminant(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1) throw PreconditionError("discriminant of a constant polynomial");
    BigInt r = exact_div(resultant(f, f.derivative()), f.lead());
    if ((n * (n - 1) / 2) % 2) r = -r;
    return r;
}

IntPoly composed_product(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw PreconditionError("composed_product: zero polynomial");
    if (f[0] != 1 || g[0] != 1) throw PreconditionError("composed_product: inputs need constant term 1");
    const int n = f.degree(), m = g.degree();
    if (n == 0) return g;
    if (m == 0) return f;

    // f*(y) = prod(y - alpha_i) is monic; G(y) = y^m g*(x/y) lives in Z[x][y].
    using BiPoly = Poly<IntPoly>;
    const IntPoly fr = f.reversed();
    std::vector<IntPoly> fy;
    for (const auto& c : fr.coeffs()) fy.emplace_back(c);
    const IntPoly gr = g.reversed();
    std::vector<IntPoly> gy(static_cast<std::size_t>(m + 1));
    for (int k = 0; k <= m; ++k) gy[static_cast<std::size_t>(m - k)] = IntPoly::monomial(gr[k], static_cast<std::size_t>(k));

    IntPoly h = resultant(BiPoly(std::move(fy)), BiPoly(std::move(gy)));
    if (h.degree() != n * m) throw InternalError("composed_product: unexpected resultant degree");
    IntPoly out = h.reversed();
    if (out[0] != 1) throw InternalError("composed_product: result not normalized");
    return out;
}

RatPoly to_rational(const IntPoly& f) {
    std::vector<Rational> c;
    for (const auto& x : f.coeffs()) c.emplace_back(x);
    return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
    RatPoly r = a;
    if (a.degree() < b.degree()) return {RatPoly{}, r};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const auto k = static_cast<std::size_t>(r.degree() - b.degree());
        Rational c = r.lead() / b.lead();
        r -= RatPoly::monomial(c, k) * b;
        q[k] = c;
    }
    return {RatPoly(std::move(q)), r};
}

bool divides(const IntPoly& g, const IntPoly& f) {
    auto [q, r] = divmod(to_rational(f), to_rational(g));
    if (!r.is_zero()) return false;
    for (const auto& c : q.coeffs()) {
        if (c.get_den() != 1) return false;
    }
    return true;
}

std::vector<BigInt> reciprocal_root_power_sums(const IntPoly& f, unsigned count) {
    if (f[0] != 1) throw PreconditionError("power sums need constant term 1");
    std::vector<BigInt> s(count + 1);
    for (unsigned r = 1; r <= count; ++r) {
        BigInt acc = -BigInt(r) * f[r];
        for (unsigned k = 1; k < r; ++k) acc -= f[k] * s[r - k];
        s[r] = acc;
    }
    s.erase(s.begin());
    return s;
}

std::string to_string(const IntPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const BigInt& c = f.coeffs()[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace artin
