#include "artin/lfun/rankin_selberg.hpp"

#include "artin/arith/numtheory.hpp"
#include "artin/error.hpp"

namespace artin {

namespace {

using CycloPoly = Poly<CycloInt>;

IntPoly certify_integral(const CycloPoly& f, const std::string& what) {
    std::vector<BigInt> c;
    for (const auto& x : f.coeffs()) {
        const auto v = x.to_integer();
        if (!v) throw InternalError(what + ": coefficient " + x.to_string() + " is not a rational integer");
        c.push_back(*v);
    }
    return IntPoly(std::move(c));
}

}  // namespace

LocalFactor rankin_selberg_elliptic(const BigInt& a, std::uint64_t p, const GroupTable& G, const ClassFunction& chi,
                                    std::size_t c, const std::string& label) {
    const auto e = eigenvalue_multiset(G, chi, c);
    const BigInt P = from_u64(p);
    CycloPoly acc{CycloInt(1)};
    for (unsigned k : e.exponents()) {
        const CycloInt lam = CycloInt::zeta(e.order, k);
        acc = acc * CycloPoly{CycloInt(1), CycloInt(BigInt(-a)) * lam, CycloInt(P) * lam * lam};
    }
    const std::string what = label + " at p = " + std::to_string(p) + ", class " + G.classes[c].label;
    return LocalFactor(label, p, static_cast<unsigned>(e.exponents().size()), certify_integral(acc, what));
}

IntPoly eigenvalue_polynomial(const GroupTable& G, const ClassFunction& chi, std::size_t c) {
    const auto e = eigenvalue_multiset(G, chi, c);
    CycloPoly acc{CycloInt(1)};
    for (unsigned k : e.exponents()) acc = acc * CycloPoly{CycloInt(1), -CycloInt::zeta(e.order, k)};
    return certify_integral(acc, "eigenvalue polynomial at " + G.classes[c].label);
}

LocalFactor rankin_selberg_general(const LocalFactor& L, const GroupTable& G, const ClassFunction& chi, std::size_t c) {
    const IntPoly ev = eigenvalue_polynomial(G, chi, c);
    return LocalFactor(L.label(), L.prime(), L.genus() * static_cast<unsigned>(ev.degree()),
                       composed_product(L.poly(), ev));
}

LocalFactor calcfac_closed_form(const BigInt& a, std::uint64_t p, CalcfacCase which) {
    const BigInt P = from_u64(p);
    const BigInt s2 = power_sum(a, P, 2);
    IntPoly quartic;
    if (which == CalcfacCase::fL3_is_3) {
        // pairs (z alpha, z^-1 conj alpha), (z^-1 alpha, z conj alpha): sum of traces -a, product s2 - p
        quartic = IntPoly{BigInt(1), a, s2 + P, a * P, P * P};
    } else {
        // (1 + alpha^2 T^2)(1 + conj(alpha)^2 T^2)
        quartic = IntPoly{BigInt(1), BigInt(0), s2, BigInt(0), P * P};
    }
    return LocalFactor("closed-form", p, 3, elliptic_poly(a, p) * quartic);
}

CalcfacCase parse_calcfac_case(const std::string& s) {
    if (s == "fL3=3" || s == "3") return CalcfacCase::fL3_is_3;
    if (s == "fL4=4" || s == "4") return CalcfacCase::fL4_is_4;
    throw PreconditionError("unsupported case " + s + " (use fL3=3 or fL4=4)");
}

ResScalarsResult res_scalars_check(const EllipticCurveSpec& E, const BigInt& d, std::uint64_t p, const GroupTable& C2) {
    if (d == 1) throw PreconditionError("d = 1 does not define a quadratic field");
    if (d == 0 || !is_squarefree(d)) throw PreconditionError("d must be squarefree and nonzero");
    if (p == 2 || !is_prime(p)) throw PreconditionError("p must be an odd prime");
    if (mod_u64(d, p) == 0) throw PreconditionError("p = " + std::to_string(p) + " ramifies in Q(sqrt d)");
    if (E.is_bad(p)) throw BadReduction(p, E.label);

    const BigInt a = ap(E, p);
    const BigInt P = from_u64(p);
    const IntPoly Lp = elliptic_poly(a, p);
    const auto& chi_t = C2.irreducibles.at(0);
    const auto& chi_q = C2.irreducibles.at(1);
    ResScalarsResult R;
    R.split = kronecker(d, P) == 1;
    const std::size_t frob = R.split ? 0 : 1;
    const IntPoly rs = rankin_selberg_elliptic(a, p, C2, chi_t, frob).poly() *
                       rankin_selberg_elliptic(a, p, C2, chi_q, frob).poly();
    if (R.split) {
        R.lhs = Lp * Lp;
        R.rhs = rs;
        R.equal = R.lhs == R.rhs;
    } else {
        R.lhs = IntPoly{BigInt(1), BigInt(0), BigInt(-power_sum(a, P, 2)), BigInt(0), P * P};
        const EllipticCurveSpec Ed = quadratic_twist(E, d);
        R.rhs = Lp * elliptic_poly(BigInt(ap(Ed, p)), p);
        R.equal = R.lhs == R.rhs && R.rhs == rs;
    }
    return R;
}

BigInt c2_point_count(const BigInt& a, std::uint64_t p, const GroupTable& G, const ClassFunction& chi, std::size_t c,
                      unsigned r) {
    if (r == 0) throw PreconditionError("r must be positive");
    const auto t = chi[G.power_class(c, static_cast<long>(r))].to_integer();
    if (!t) throw PreconditionError("character value at the class of Frob^r is not an integer");
    const BigInt P = from_u64(p), q = pow(P, r);
    const BigInt nE = 1 + q - power_sum(a, P, static_cast<long>(r));
    const BigInt formula = (1 + q) * (1 - *t) + *t * nE;

    const LocalFactor L = rankin_selberg_elliptic(a, p, G, chi, c);
    const BigInt direct = 1 + q - reciprocal_root_power_sums(L.poly(), r).back();
    if (direct != formula) {
        throw InternalError("point count mismatch at p = " + std::to_string(p) + ", r = " + std::to_string(r) + ": " +
                            formula.get_str() + " vs " + direct.get_str());
    }
    return formula;
}

bool normalized_identities_hold(const LocalFactor& L, const BigInt& a, const BigInt& t) {
    if (L.genus() != 3) return false;
    const BigInt P = from_u64(L.prime());
    return L.coeff(1) == -a * t && L.coeff(2) == t * (a * a - 2 * P + t * P) &&
           L.coeff(3) == -a * (a * a + (t * t - 3) * P);
}

}  // namespace artin
