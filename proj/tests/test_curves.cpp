#include <fstream>
#include <thread>

#include "doctest.h"
#include "json.hpp"

#include "artin/arith/numtheory.hpp"
#include "artin/curves/registry.hpp"
#include "artin/error.hpp"

using namespace artin;

namespace {

const Registry& shipped() {
    static const Registry R = load_registry(std::string(ARTIN_DATA_DIR) + "/registry.json");
    return R;
}

// #E(F_p) by testing every (x, y) on the long Weierstrass model
long brute_count(const EllipticCurveSpec& E, long p) {
    long a[5];
    for (int i = 0; i < 5; ++i) a[i] = static_cast<long>(mod_u64(E.a[i], p));
    long n = 1;
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y) {
            const long lhs = (y * y + a[0] * x * y + a[2] * y) % p;
            const long rhs = (((x + a[1]) * x % p + a[3]) * x + a[4]) % p;
            if (lhs == rhs) ++n;
        }
    return n;
}

long brute_ap(const EllipticCurveSpec& E, long p) { return p + 1 - brute_count(E, p); }

// projective points of the quartic, evaluating the integer form on normalized representatives
long brute_quartic(const PlaneQuarticSpec& Q, long p) {
    long n = 0;
    auto zero = [&](long x, long y, long z) { return mod_u64(Q.eval(x, y, z), p) == 0; };
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y) n += zero(x, y, 1);
    for (long x = 0; x < p; ++x) n += zero(x, 1, 0);
    n += zero(1, 0, 0);
    return n;
}

}  // namespace

TEST_SUITE("curves") {
    TEST_CASE("registry loads the two curves and C1") {
        const Registry& R = shipped();
        CHECK(R.curves.size() == 2);
        CHECK(R.quartics.size() == 1);
        CHECK(R.warnings.empty());
        CHECK(R.curve("21.A1").discriminant() == 3 * 3 * 3 * 3 * 7 * 7);
        CHECK(R.curve("21.A1").c4() == 193);
        CHECK(R.curve("21.A1").c6() == 575);
        CHECK(R.curve("63.A2").c4() == 1737);
        CHECK(R.curve("63.A2").c6() == -15525);
        CHECK_THROWS_AS(R.curve("11.a1"), NotFound);
    }

    TEST_CASE("ap matches enumeration of the long model") {
        const Registry& R = shipped();
        for (const auto& E : R.curves) {
            for (auto p : primes_in(5, 150)) {
                if (E.is_bad(p)) continue;
                CHECK(ap(E, p) == brute_ap(E, static_cast<long>(p)));
            }
        }
    }

    TEST_CASE("ap of 21.A1 at small primes") {
        const auto& E = shipped().curve("21.A1");
        const std::vector<std::pair<std::uint64_t, long>> table{
            {5, -2}, {11, 4}, {13, -2}, {17, -6}, {19, 4}, {23, 0}, {29, -2},
            {31, 0}, {37, 6}, {41, 2}, {43, -4}, {47, 0}, {53, 6}, {59, 12}};
        for (const auto& [p, a] : table) CHECK(ap(E, p) == a);
    }

    TEST_CASE("bad and tiny primes are refused") {
        const Registry& R = shipped();
        CHECK_THROWS_AS(ap(R.curve("21.A1"), 7), BadReduction);
        CHECK_THROWS_AS(ap(R.curve("63.A2"), 7), BadReduction);
        CHECK_THROWS_AS(ap(R.curve("21.A1"), 3), PreconditionError);
        CHECK_THROWS_AS(ap(R.curve("21.A1"), 2), PreconditionError);
        CHECK_THROWS_AS(local_factor(R.curve("21.A1"), 7), BadReduction);
        try {
            ap(R.curve("21.A1"), 7);
        } catch (const BadReduction& e) {
            CHECK(e.prime() == 7);
        }
    }

    TEST_CASE("y^2 = x^3 + x over F_3 by enumeration") {
        EllipticCurveSpec E{"y2=x3+x", {0, 0, 0, 1, 0}, std::nullopt};
        CHECK(count_points_ext(E, 3, 1, CountMode::enumerate) == 4);
        CHECK(brute_count(E, 3) == 4);
    }

    TEST_CASE("twist relation between 63.A2 and 21.A1") {
        const Registry& R = shipped();
        for (auto p : primes_in(5, 500)) {
            if (p == 7) continue;
            CHECK(ap(R.curve("63.A2"), p) == kronecker(-3, p) * ap(R.curve("21.A1"), p));
        }
    }

    TEST_CASE("point counts over extensions") {
        const Registry& R = shipped();
        for (const auto& E : R.curves) {
            for (std::uint64_t p : {5, 11, 13}) {
                const long a = ap(E, p);
                const BigInt P = p;
                CHECK(count_points_ext(E, p, 1, CountMode::formula) == 1 + P - a);
                CHECK(count_points_ext(E, p, 3, CountMode::formula) == 1 + P * P * P - a * a * a + 3 * a * P);
                for (unsigned r : {1u, 2u, 3u})
                    CHECK(count_points_ext(E, p, r, CountMode::enumerate) == count_points_ext(E, p, r, CountMode::formula));
            }
            CHECK(count_points_ext(E, 5, 1, CountMode::enumerate) == brute_count(E, 5));
        }
        CHECK_THROWS_AS(count_points_ext(R.curve("21.A1"), 101, 3, CountMode::enumerate), PreconditionError);
        CHECK_THROWS_AS(count_points_ext(R.curve("21.A1"), 7, 2, CountMode::formula), BadReduction);
        CHECK_THROWS_AS(count_points_ext(R.curve("21.A1"), 5, 0, CountMode::formula), PreconditionError);
    }

    TEST_CASE("quadratic twists") {
        const auto& E = shipped().curve("21.A1");
        const auto same = quadratic_twist(E, 1);
        for (auto p : primes_in(5, 200))
            if (!E.is_bad(p)) CHECK(ap(same, p) == ap(E, p));
        for (long d : {-3L, 5L, -7L, -35L}) {
            const auto T = quadratic_twist(E, d);
            for (auto p : primes_in(5, 50)) {
                if (E.is_bad(p) || d % static_cast<long>(p) == 0) continue;
                CHECK(brute_ap(T, static_cast<long>(p)) == kronecker(d, p) * ap(E, p));
                CHECK(ap(T, p) == brute_ap(T, static_cast<long>(p)));
            }
        }
        CHECK_THROWS_AS(quadratic_twist(E, 0), PreconditionError);
        CHECK_THROWS_AS(quadratic_twist(E, 12), PreconditionError);
    }

    TEST_CASE("local factor of an elliptic curve") {
        const auto& E = shipped().curve("21.A1");
        for (auto p : primes_in(5, 300)) {
            if (E.is_bad(p)) continue;
            const LocalFactor L = local_factor(E, p);
            CHECK(L.coeff(0) == 1);
            CHECK(L.coeff(1) == -ap(E, p));
            CHECK(L.coeff(2) == p);
            CHECK(L.has_functional_equation());
            CHECK(L.within_weil_bounds());
            const auto n = L.normalized();
            CHECK(n[1] >= -2.0L);
            CHECK(n[1] <= 2.0L);
            CHECK(n[2] == doctest::Approx(1.0));
        }
    }

    TEST_CASE("quartic count matches a projective brute force and the Weil bound") {
        const Registry& R = shipped();
        const auto& C1 = R.quartic("C1");
        for (auto p : primes_in(5, 80)) {
            if (C1.is_bad(p)) continue;
            const auto n = static_cast<long>(count_quartic(C1, p));
            CHECK(n == brute_quartic(C1, static_cast<long>(p)));
            const long dev = n - 1 - static_cast<long>(p);
            CHECK(dev * dev <= 36 * static_cast<long>(p));
        }
        CHECK_THROWS_AS(count_quartic(C1, 7), BadReduction);
        CHECK_THROWS_AS(count_quartic(C1, 3), BadReduction);
    }

    // Frozen observation: the stored C1 is related to 63.A2, not 21.A1.
    TEST_CASE("C1 counts follow 1 + p - 3 a63(p)") {
        const Registry& R = shipped();
        const auto& C1 = R.quartic("C1");
        const auto& E63 = R.curve("63.A2");
        for (auto p : primes_in(5, 199)) {
            if (C1.is_bad(p)) continue;
            CHECK(static_cast<long>(count_quartic(C1, p)) == 1 + static_cast<long>(p) - 3 * ap(E63, p));
        }
    }

    TEST_CASE("traces and C1 counts agree with the recorded oracle") {
        std::ifstream in(std::string(ARTIN_TEST_DIR) + "/oracles/curves_expected.json");
        REQUIRE(in);
        const auto j = nlohmann::json::parse(in);
        const Registry& R = shipped();
        long checked = 0;
        for (const auto& row : j["rows"]) {
            if (!row.contains("a21")) continue;
            const auto p = row["p"].get<std::uint64_t>();
            CHECK(ap(R.curve("21.A1"), p) == row["a21"].get<long>());
            CHECK(ap(R.curve("63.A2"), p) == row["a63"].get<long>());
            CHECK(static_cast<long>(count_quartic(R.quartic("C1"), p)) == row["c1"].get<long>());
            ++checked;
        }
        CHECK(checked == 43);
    }

    TEST_CASE("registry diagnostics") {
        CHECK_THROWS_WITH_AS(parse_registry(R"({"curves":[{"label":"a","weierstrass":[0,0,0,1,0]},
                                                          {"label":"a","weierstrass":[0,0,0,2,0]}]})"),
                             doctest::Contains("duplicate label \"a\""), ConfigError);
        CHECK_THROWS_WITH_AS(parse_registry(R"({"curves":[{"label":"a","weierstrass":[0,0,0]}]})"),
                             doctest::Contains("curves[0].weierstrass"), ConfigError);
        CHECK_THROWS_WITH_AS(parse_registry(R"({"curves":[{"weierstrass":[0,0,0,1,0]}]})"),
                             doctest::Contains("missing field \"label\""), ConfigError);
        CHECK_THROWS_WITH_AS(parse_registry(R"({"curves":[{"label":"s","weierstrass":[0,0,0,0,0]}]})"),
                             doctest::Contains("singular"), ConfigError);
        CHECK_THROWS_WITH_AS(parse_registry(R"({"curves":[{"label":"c","weierstrass":[1,0,0,-4,-1],"conductor":55}]})"),
                             doctest::Contains("conductor prime"), ConfigError);
        CHECK_THROWS_WITH_AS(parse_registry("{\n\"curves\": [\n  {\"label\": }\n]}"), doctest::Contains("line 3"),
                             ConfigError);
        CHECK_THROWS_WITH_AS(parse_registry(R"({"quartics":[{"label":"q","monomials":{"310":1,"200":1}}]})"),
                             doctest::Contains("not of degree 4"), ConfigError);

        const Registry R = parse_registry(R"({"quartics":[{"label":"q","monomials":{"400":7,"040":7,"004":7},
                                                          "denominator":7,"bad_primes":[2,3]}]})");
        REQUIRE(R.warnings.size() == 1);
        CHECK(R.warnings[0].find("denominator prime 7") != std::string::npos);
        CHECK(parse_registry(R"({"curves":[{"label":"b","weierstrass":["1","0","0","-4","-1"],"conductor":"21"}]})")
                  .curve("b")
                  .c4() == 193);
    }

    TEST_CASE("ap cache under concurrent readers") {
        const auto& E = shipped().curve("21.A1");
        const auto primes = primes_in(5, 2000);
        ApCache cache;
        std::vector<std::thread> pool;
        std::vector<int> ok(4, 1);
        for (int t = 0; t < 4; ++t) {
            pool.emplace_back([&, t] {
                for (auto p : primes) {
                    if (p == 7) continue;
                    if (cache.get(E, p) != ap(E, p)) ok[t] = 0;
                }
            });
        }
        for (auto& th : pool) th.join();
        for (int v : ok) CHECK(v == 1);
        CHECK(cache.size() == primes.size() - 1);
        CHECK(ap_many(E, {5, 11, 13}, 3) == std::vector<long>{-2, 4, -2});
    }
}
