#include <fstream>

#include "doctest.h"
#include "json.hpp"

#include "artin/curves/registry.hpp"
#include "artin/error.hpp"
#include "artin/lfun/rankin_selberg.hpp"
#include "artin/satotate/moments.hpp"

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

const S4Field& field() {
    static const S4Field F = find_s4_quartic(4);
    return F;
}

std::vector<PrimeSample> samples(std::uint64_t bound, unsigned workers = 0, bool ss = true) {
    const auto& S4 = lib().get("S4");
    return collect_samples(reg().curve("63.A2"), field(), S4, S4.character("chi4"), {bound, ss, workers});
}

}  // namespace

TEST_SUITE("satotate") {
    TEST_CASE("closed forms agree with the direct-expectation oracle") {
        const auto& S4 = lib().get("S4");
        const auto& t = S4.character("chi4");
        std::ifstream in(std::string(ARTIN_TEST_DIR) + "/oracles/moments_expected.json");
        REQUIRE(in);
        const auto rows = nlohmann::json::parse(in);
        REQUIRE(rows.size() == 21);
        for (const auto& r : rows) {
            const int i = r["coefficient"];
            const unsigned n = r["order"];
            INFO("abar" << i << " order " << n);
            CHECK(to_string(theoretical_moment(S4, t, i, n)) == r["value"].get<std::string>());
        }
        CHECK(theoretical_moment(S4, t, 1, 2) == 1);
        CHECK(theoretical_moment(S4, t, 1, 4) == 8);
        CHECK(theoretical_moment(S4, t, 1, 1) == 0);
        CHECK(theoretical_moment(S4, t, 2, 1) == 1);
    }

    TEST_CASE("normalization and argument checks") {
        for (const auto& id : {"S4", "C2"}) {
            const auto& G = lib().get(id);
            for (const auto& chi : G.irreducibles) CHECK(theoretical_moment(G, chi, 1, 0) == 1);
        }
        const auto& S4 = lib().get("S4");
        CHECK_THROWS_AS(theoretical_moment(S4, S4.character("chi4"), 4, 2), PreconditionError);
        CHECK_THROWS_AS(theoretical_moment(S4, S4.character("chi4"), 0, 2), PreconditionError);
        CHECK_THROWS_AS(theoretical_moment(S4, S4.character("chi3") - S4.character("chi3") +
                                                   S4.make({1, 1, 1, CycloInt::zeta(3, 1), 1}),
                                           1, 2),
                        PreconditionError);
        const auto& G = lib().get("G288");
        CHECK_THROWS_AS(theoretical_moment(G, G.trivial(), 1, 2), PreconditionError);
        CHECK_THROWS_AS(samples(999), PreconditionError);
        const auto few = std::vector<PrimeSample>(50, PrimeSample{5, 1, 1});
        CHECK_THROWS_AS(empirical_moment(S4, S4.character("chi4"), 1, 2, few), PreconditionError);
    }

    TEST_CASE("per-prime abar values match the J(C2) factor") {
        const auto& S4 = lib().get("S4");
        const auto& chi4 = S4.character("chi4");
        for (const auto& s : samples(2000)) {
            const auto L = rankin_selberg_elliptic(s.a, s.p, S4, chi4, S4.class_index(frobenius_class(field(), s.p).cls));
            const auto n = L.normalized();
            for (int i = 1; i <= 3; ++i) CHECK(abar_coefficient(i, s) == doctest::Approx(static_cast<double>(n[i])));
            CHECK(abar_coefficient(0, s) == 1);
        }
    }

    TEST_CASE("empirical moments at a small bound") {
        const auto& S4 = lib().get("S4");
        const auto& t = S4.character("chi4");
        const auto s = samples(20000);
        CHECK(s.size() > 2000);
        const auto m0 = empirical_moment(S4, t, 2, 0, s);
        CHECK(m0.empirical == 1.0);
        CHECK(m0.stderr_ == 0.0);
        for (auto [i, n] : {std::pair{1, 1u}, {1, 2u}, {2, 1u}, {3, 1u}, {3, 2u}}) {
            const auto r = empirical_moment(S4, t, i, n, s);
            INFO(r.quantity << " order " << n << ": " << r.empirical << " +- " << r.stderr_);
            CHECK(r.pass);
            CHECK(r.n_primes == s.size());
            CHECK(r.tolerance >= 0.1);
        }
        const auto no_ss = samples(20000, 0, false);
        CHECK(no_ss.size() < s.size());
        for (const auto& x : no_ss) CHECK(x.a != 0);
    }

    TEST_CASE("results do not depend on the worker count") {
        const auto& S4 = lib().get("S4");
        const auto a = samples(8000, 1), b = samples(8000, 4);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) CHECK((a[k].p == b[k].p && a[k].a == b[k].a && a[k].t == b[k].t));
        const auto ra = empirical_moment(S4, S4.character("chi4"), 1, 4, a);
        const auto rb = empirical_moment(S4, S4.character("chi4"), 1, 4, b);
        CHECK(ra.empirical == rb.empirical);
        CHECK(ra.stderr_ == rb.stderr_);
    }

    TEST_CASE("Catalan moments of the elliptic trace") {
        const auto& E = reg().curve("63.A2");
        const auto r0 = catalan_moment_check(E, 0, 5000);
        CHECK(r0.empirical == 1.0);
        CHECK(r0.pass);
        const auto r1 = catalan_moment_check(E, 1, 20000, 2);
        CHECK(r1.theoretical == 1);
        CHECK(r1.pass);
        const auto r2 = catalan_moment_check(E, 2, 20000);
        CHECK(r2.theoretical == 2);
        CHECK(r2.pass);
        const EllipticCurveSpec cm{"32a", {0, 0, 0, -1, 0}, std::nullopt};
        CHECK_THROWS_AS(catalan_moment_check(cm, 1, 5000), PreconditionError);
    }
}
