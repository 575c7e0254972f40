#include <cmath>
#include <complex>

#include "doctest.h"

#include "artin/arith/numtheory.hpp"
#include "artin/curves/registry.hpp"
#include "artin/error.hpp"
#include "artin/frobenius/s4_field.hpp"
#include "artin/lfun/rankin_selberg.hpp"

using namespace artin;

namespace {

const GroupLibrary& lib() {
    static const GroupLibrary L = GroupLibrary::load(std::string(ARTIN_DATA_DIR) + "/groups");
    return L;
}

const Registry& reg() {
    static const Registry R = load_registry(std::string(ARTIN_DATA_DIR) + "/registry.json");
    return R;
}

using cplx = std::complex<long double>;

// expand prod (1 - a lambda T + p lambda^2 T^2) from numeric roots and round
std::vector<long> numeric_rs(long a, long p, const std::vector<cplx>& lambdas) {
    const long double disc = 4.0L * p - static_cast<long double>(a) * a;
    const cplx alpha(a / 2.0L, std::sqrt(std::max(disc, 0.0L)) / 2.0L);
    std::vector<cplx> poly{1};
    auto mul_linear = [&](cplx r) {  // poly *= (1 - r T)
        std::vector<cplx> out(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            out[i] += poly[i];
            out[i + 1] -= r * poly[i];
        }
        poly = out;
    };
    for (const auto& l : lambdas) {
        mul_linear(alpha * l);
        mul_linear(std::conj(alpha) * l);
    }
    std::vector<long> c;
    for (const auto& z : poly) c.push_back(std::lround(static_cast<double>(z.real())));
    return c;
}

std::vector<long> as_longs(const IntPoly& f) {
    std::vector<long> c;
    for (const auto& x : f.coeffs()) c.push_back(x.get_si());
    return c;
}

cplx root_of_unity(unsigned r, unsigned k) {
    const long double th = 2.0L * 3.14159265358979323846264338327950288L * k / r;
    return {std::cos(th), std::sin(th)};
}

}  // namespace

TEST_SUITE("lfun") {
    TEST_CASE("Rankin-Selberg small cases") {
        const auto& G = lib().get("S4");
        const auto& C2 = lib().get("C2");
        for (long a : {-3L, 0L, 2L, 5L}) {
            const std::uint64_t p = 11;
            const BigInt P = 11;
            CHECK(rankin_selberg_elliptic(a, p, G, G.trivial(), 2).poly() == elliptic_poly(a, p));
            CHECK(rankin_selberg_elliptic(a, p, C2, C2.character("chi_q"), 1).poly() == IntPoly{1, a, P});
            const IntPoly want = elliptic_poly(a, p) * IntPoly{1, a, BigInt(a * a) - P, a * P, P * P};
            CHECK(rankin_selberg_elliptic(a, p, G, G.character("chi4"), G.class_index("3a")).poly() == want);
        }
    }

    TEST_CASE("Rankin-Selberg agrees with a numeric expansion") {
        const auto& G = lib().get("S4");
        for (long p : {5L, 13L, 29L, 97L}) {
            const long bound = static_cast<long>(std::floor(2 * std::sqrt(double(p))));
            for (long a = -bound; a <= bound; ++a) {
                for (const auto& chi : G.irreducibles) {
                    for (std::size_t c = 0; c < G.classes.size(); ++c) {
                        std::vector<cplx> lam;
                        for (unsigned k : eigenvalue_multiset(G, chi, c).exponents())
                            lam.push_back(root_of_unity(G.classes[c].order, k));
                        const auto L = rankin_selberg_elliptic(a, static_cast<std::uint64_t>(p), G, chi, c);
                        CHECK(as_longs(L.poly()) == numeric_rs(a, p, lam));
                        CHECK(L.has_functional_equation());
                        CHECK(L.within_weil_bounds());
                        CHECK(rankin_selberg_general(LocalFactor("E", p, 1, elliptic_poly(a, p)), G, chi, c).poly() ==
                              L.poly());
                    }
                }
            }
        }
    }

    TEST_CASE("closed forms match the eigenvalue expansion") {
        const auto& G = lib().get("S4");
        const auto& chi4 = G.character("chi4");
        for (auto p : primes_in(5, 200)) {
            const long bound = static_cast<long>(std::floor(2 * std::sqrt(double(p))));
            for (long a = -bound; a <= bound; ++a) {
                CHECK(calcfac_closed_form(a, p, CalcfacCase::fL3_is_3).poly() ==
                      rankin_selberg_elliptic(a, p, G, chi4, G.class_index("3a")).poly());
                CHECK(calcfac_closed_form(a, p, CalcfacCase::fL4_is_4).poly() ==
                      rankin_selberg_elliptic(a, p, G, chi4, G.class_index("4a")).poly());
            }
        }
        const BigInt P = 7;
        CHECK(calcfac_closed_form(0, 7, CalcfacCase::fL3_is_3).poly() ==
              IntPoly{1, 0, P} * IntPoly{1, 0, -P, 0, P * P});
        CHECK(calcfac_closed_form(0, 7, CalcfacCase::fL4_is_4).poly() ==
              IntPoly{1, 0, P} * IntPoly{1, 0, -2 * P, 0, P * P});
        CHECK_THROWS_AS(parse_calcfac_case("fL2=2"), PreconditionError);
        CHECK(parse_calcfac_case("fL4=4") == CalcfacCase::fL4_is_4);
    }

    TEST_CASE("J(C2) factors: divisibility, symmetry and the abar identities") {
        const auto& G = lib().get("S4");
        const auto& chi4 = G.character("chi4");
        const auto& E63 = reg().curve("63.A2");
        const S4Field F = find_s4_quartic(4);
        for (auto p : primes_in(5, 600)) {
            if (E63.is_bad(p) || F.is_ramified(p)) continue;
            const long a = ap(E63, p);
            const auto c = G.class_index(frobenius_class(F, p).cls);
            const auto L = rankin_selberg_elliptic(a, p, G, chi4, c, "J(C2)");
            CHECK(L.genus() == 3);
            CHECK(divides(elliptic_poly(a, p), L.poly()));
            CHECK_NOTHROW(L.check_invariants());
            const BigInt t = *chi4[c].to_integer();
            CHECK(normalized_identities_hold(L, a, t));
            const auto n = L.normalized();
            const long double ab = a / std::sqrt(static_cast<long double>(p)), tt = t.get_si();
            CHECK(static_cast<double>(n[1]) == doctest::Approx(double(ab * tt)));
            CHECK(static_cast<double>(n[2]) == doctest::Approx(double(tt * (ab * ab - 2 + tt))));
            CHECK(static_cast<double>(n[3]) == doctest::Approx(double(ab * (ab * ab + tt * tt - 3))));
            for (int i = 0; i <= 6; ++i) CHECK(static_cast<double>(n[i]) == doctest::Approx(double(n[6 - i])));
        }
    }

    TEST_CASE("abar identities hold symbolically for every trace value") {
        const auto& G = lib().get("S4");
        const auto& chi4 = G.character("chi4");
        for (std::size_t c = 0; c < G.classes.size(); ++c) {
            const BigInt t = *chi4[c].to_integer();
            for (auto p : primes_in(5, 60)) {
                const long bound = static_cast<long>(std::floor(2 * std::sqrt(double(p))));
                for (long a = -bound; a <= bound; ++a)
                    CHECK(normalized_identities_hold(rankin_selberg_elliptic(a, p, G, chi4, c), a, t));
            }
        }
        CHECK_FALSE(normalized_identities_hold(LocalFactor("E", 5, 1, elliptic_poly(1, 5)), 1, 1));
    }

    TEST_CASE("restriction of scalars from a quadratic field") {
        const auto& C2 = lib().get("C2");
        const auto& E = reg().curve("21.A1");
        int split = 0, inert = 0;
        for (long d : {-3L, 5L, -7L, 2L}) {
            for (auto p : primes_in(5, 300)) {
                if (E.is_bad(p) || d % static_cast<long>(p) == 0) continue;
                const auto R = res_scalars_check(E, d, p, C2);
                CHECK(R.equal);
                const IntPoly L = elliptic_poly(ap(E, p), p);
                if (R.split) {
                    CHECK(R.lhs == L * L);
                    ++split;
                } else {
                    CHECK(R.lhs == L * IntPoly{1, ap(E, p), BigInt(p)});
                    ++inert;
                }
            }
        }
        CHECK(split > 0);
        CHECK(inert > 0);
        CHECK_THROWS_AS(res_scalars_check(E, 1, 5, C2), PreconditionError);
        CHECK_THROWS_AS(res_scalars_check(E, 5, 5, C2), PreconditionError);
        CHECK_THROWS_AS(res_scalars_check(E, -3, 7, C2), BadReduction);
    }

    TEST_CASE("point counts of the genus-3 curve") {
        const auto& G = lib().get("S4");
        const auto& chi4 = G.character("chi4");
        const auto& E63 = reg().curve("63.A2");
        for (std::uint64_t p : {5, 11, 13, 19}) {
            const long a = ap(E63, p);
            const BigInt P = p;
            const BigInt n1 = count_points_ext(E63, p, 1, CountMode::enumerate);
            CHECK(c2_point_count(a, p, G, chi4, G.class_index("1a"), 1) == (1 + P) * -2 + 3 * n1);
            CHECK(c2_point_count(a, p, G, chi4, G.class_index("3a"), 1) == 1 + P);
            const BigInt n2 = count_points_ext(E63, p, 2, CountMode::enumerate);
            CHECK(c2_point_count(a, p, G, chi4, G.class_index("4a"), 2) == (1 + P * P) * 2 - n2);
            for (std::size_t c = 0; c < G.classes.size(); ++c)
                for (unsigned r = 1; r <= 6; ++r) CHECK_NOTHROW(c2_point_count(a, p, G, chi4, c, r));
        }
        CHECK_THROWS_AS(c2_point_count(1, 5, G, chi4, 0, 0), PreconditionError);
    }

    TEST_CASE("triple-twist divisibility") {
        for (const auto& label : {"21.A1", "63.A2"}) {
            const auto& E = reg().curve(label);
            for (auto [d1, d2] : {std::pair{5L, -7L}, {-3L, 2L}}) {
                const std::vector<EllipticCurveSpec> tw{quadratic_twist(E, d1), quadratic_twist(E, d2),
                                                        quadratic_twist(E, d1 * d2)};
                for (auto p : primes_in(5, 300)) {
                    if (E.is_bad(p) || (d1 * d2) % static_cast<long>(p) == 0) continue;
                    IntPoly prod{1};
                    for (const auto& T : tw) prod = prod * local_factor(T, p).poly();
                    CHECK(prod.degree() == 6);
                    CHECK(divides(local_factor(E, p).poly(), prod));
                }
            }
        }
    }

    TEST_CASE("local factor invariants") {
        CHECK_THROWS_AS(LocalFactor("x", 5, 1, IntPoly{2, 1, 5}), PreconditionError);
        CHECK_THROWS_AS(LocalFactor("x", 5, 2, IntPoly{1, 1, 5}), PreconditionError);
        const LocalFactor bad("x", 5, 1, IntPoly{1, -5, 5});
        CHECK_FALSE(bad.within_weil_bounds());
        CHECK_THROWS_AS(bad.check_invariants(), InternalError);
        CHECK_FALSE(LocalFactor("x", 5, 1, IntPoly{1, 1, 3}).has_functional_equation());
        const auto n = LocalFactor("x", 4, 1, IntPoly{1, -2, 4}).normalized();
        CHECK(static_cast<double>(n[1]) == doctest::Approx(1.0));
    }
}
