#include <cmath>
#include <fstream>
#include <set>

#include "doctest.h"
#include "json.hpp"

#include "artin/arith/fq.hpp"
#include "artin/arith/numtheory.hpp"
#include "artin/error.hpp"
#include "artin/frobenius/s4_field.hpp"

using namespace artin;

namespace {

const GroupLibrary& lib() {
    static const GroupLibrary L = GroupLibrary::load(std::string(ARTIN_DATA_DIR) + "/groups");
    return L;
}

const S4Field& field_L() {
    static const S4Field F = find_s4_quartic(4);
    return F;
}

const S4Field& field_Lp() {
    static const S4Field F = find_s4_quartic(4, {field_L()});
    return F;
}

// class from root counts over F_p and F_{p^2}
std::string class_by_roots(const S4Field& F, std::uint64_t p) {
    const Fq K(p, 2);
    long r1 = 0, r2 = 0;
    for (std::uint64_t i = 0; i < K.order(); ++i) {
        const auto x = K.from_index(i);
        auto v = K.zero();
        for (int k = 4; k >= 0; --k) v = K.add(K.mul(v, x), K.from_int(static_cast<std::int64_t>(mod_u64(F.quartic()[k], p))));
        if (!K.is_zero(v)) continue;
        ++r2;
        if (i < p) ++r1;  // indices below p are the prime field
    }
    if (r1 == 4) return "1a";
    if (r1 == 2) return "2b";
    if (r1 == 1) return "3a";
    return r2 == 4 ? "2a" : "4a";
}

}  // namespace

TEST_SUITE("frobenius") {
    TEST_CASE("search finds the expected quartic") {
        const auto& F = field_L();
        CHECK(F.coeff_string() == "-4,0,-1,1");
        CHECK(F.discriminant() == -7803);
        CHECK(F.disc_kernel() == -3);
        CHECK(F.discriminant() % -3 == 0);
        CHECK(is_square(F.discriminant() / -3));
        CHECK(F.bad_primes() == std::vector<BigInt>{3, 17});
        CHECK(F.resolvent() == resolvent_cubic(-4, 0, -1, 1));
    }

    TEST_CASE("second field has a different resolvent field") {
        const auto& F = field_L();
        const auto& G = field_Lp();
        CHECK_FALSE(same_cubic_field(F, G));
        CHECK(same_cubic_field(F, F));
        CHECK(is_square(G.discriminant() / -3));
        CHECK_FALSE(G.coeff_string() == F.coeff_string());
    }

    TEST_CASE("certificates reject non-S4 or wrong-discriminant quartics") {
        CHECK_THROWS_AS(S4Field::from_coeffs(0, 0, 0, 1), PreconditionError);   // x^4 + 1
        CHECK_THROWS_AS(S4Field::from_coeffs(0, 0, 0, -2), PreconditionError);  // x^4 - 2
        CHECK_THROWS_AS(S4Field::from_coeffs(0, -1, 0, 0), PreconditionError);  // x^2 (x^2 - 1)
        CHECK_THROWS_AS(S4Field::from_coeffs(0, 0, -1, -1), PreconditionError); // x^4 - x - 1, disc -283
        CHECK_THROWS_AS(find_s4_quartic(2), NotFound);
        CHECK_THROWS_AS(find_s4_quartic(1), PreconditionError);
    }

    TEST_CASE("class from DDF agrees with root counting") {
        for (const S4Field* F : {&field_L(), &field_Lp()}) {
            for (auto p : primes_in(2, 250)) {
                if (F->is_ramified(p)) continue;
                CHECK(frobenius_class(*F, p).cls == class_by_roots(*F, p));
            }
        }
    }

    TEST_CASE("classes agree with the recorded oracle") {
        std::ifstream in(std::string(ARTIN_TEST_DIR) + "/oracles/curves_expected.json");
        REQUIRE(in);
        const auto j = nlohmann::json::parse(in);
        const auto& F = field_L();
        CHECK(F.coeffs() == std::array<long, 4>{-4, 0, -1, 1});
        CHECK(F.discriminant() == BigInt(j["discriminant"].get<long>()));
        for (const auto& row : j["rows"]) {
            const auto p = row["p"].get<std::uint64_t>();
            if (!row.contains("class")) {
                CHECK(F.is_ramified(p));
                continue;
            }
            CHECK(frobenius_class(F, p).cls == row["class"].get<std::string>());
        }
    }

    TEST_CASE("residue degrees and parity") {
        const auto& F = field_L();
        for (auto p : primes_in(2, 5000)) {
            if (F.is_ramified(p)) continue;
            const auto D = frobenius_class(F, p);
            const bool even = D.cls == "1a" || D.cls == "2a" || D.cls == "3a";
            CHECK((kronecker(-3, p) == 1) == even);
            CHECK((D.cls == "3a") == (D.f_L3 == 3));
            CHECK((D.cls == "4a") == (D.f_L4 == 4));
            if (D.cls == "1a") CHECK((D.f_L3 == 1 && D.f_L4 == 1 && D.f_Q3 == 1));
        }
        CHECK_THROWS_AS(frobenius_class(F, 17), RamifiedPrime);
        CHECK_THROWS_AS(frobenius_class(F, 3), RamifiedPrime);
        CHECK_THROWS_AS(class_of_pattern({1, 1, 1}), InconsistentData);
    }

    TEST_CASE("Chebotarev proportions") {
        const auto n = class_frequencies(field_L(), 2, 10000);
        long total = 0;
        for (const auto& [k, v] : n) total += v;
        const std::map<std::string, double> expect{{"1a", 1}, {"2a", 3}, {"2b", 6}, {"3a", 8}, {"4a", 6}};
        for (const auto& [k, v] : expect) CHECK(std::abs(double(n.at(k)) / total - v / 24) <= 0.05);
    }

    TEST_CASE("joint classes in the order-288 table") {
        const auto& H = lib().get("G288");
        const auto& F = field_L();
        const auto& G = field_Lp();
        const auto& psi13 = H.character("psi13");
        std::set<std::vector<std::string>> seen;
        for (auto p : primes_in(2, 10000)) {
            if (F.is_ramified(p) || G.is_ramified(p)) continue;
            const auto J = joint_class(H, F, G, p);
            const auto x = frobenius_class(F, p).cls, y = frobenius_class(G, p).cls;
            if (x == "1a" && y == "1a") CHECK(J == std::vector<std::string>{"1A"});
            if (x == "3a" && y == "3a") CHECK(J == std::vector<std::string>{"3C", "3D"});
            if (x == "2b" && y == "2b") CHECK(J == std::vector<std::string>{"2D"});
            for (const auto& c : J) CHECK(psi13[H.class_index(c)] == psi13[H.class_index(J[0])]);
            seen.insert(J);
        }
        CHECK(seen.size() == 13);
    }
}
