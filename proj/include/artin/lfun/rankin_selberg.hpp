#pragma once

#include <cstdint>
#include <string>

#include "artin/chars/group_table.hpp"
#include "artin/curves/elliptic.hpp"
#include "artin/lfun/local_factor.hpp"

namespace artin {

/// prod over eigenvalues lambda of chi at class c of (1 - a lambda T + p lambda^2 T^2),
/// expanded in Z[zeta][T]; every coefficient is certified to be a rational integer.
LocalFactor rankin_selberg_elliptic(const BigInt& a, std::uint64_t p, const GroupTable& G, const ClassFunction& chi,
                                    std::size_t c, const std::string& label = "RS");

/// prod over eigenvalues lambda of (1 - lambda T), certified integral.
IntPoly eigenvalue_polynomial(const GroupTable& G, const ClassFunction& chi, std::size_t c);

/// composed_product(L, eigenvalue polynomial) for a left factor of any degree.
LocalFactor rankin_selberg_general(const LocalFactor& L, const GroupTable& G, const ClassFunction& chi, std::size_t c);

enum class CalcfacCase { fL3_is_3, fL4_is_4 };

/// (1 - aT + pT^2) times the degree-4 factor of the two residue-degree cases, from
/// the symmetric functions of the reciprocal roots.
LocalFactor calcfac_closed_form(const BigInt& a, std::uint64_t p, CalcfacCase which);
CalcfacCase parse_calcfac_case(const std::string& s);

struct ResScalarsResult {
    bool split = false;
    IntPoly lhs, rhs;
    bool equal = false;
};

/// Degree-2 restriction of scalars from Q(sqrt d) at a good odd p not dividing d:
/// split p compares L_p(E)^2 with RS(E, chi_t) RS(E, chi_q at 1a); inert p compares
/// 1 - s_2 T^2 + p^2 T^4 with L_p(E) L_p(E_d), where E_d is counted independently,
/// and with RS(E, chi_t) RS(E, chi_q at 2a). C2 is the table of Gal(Q(sqrt d)/Q).
ResScalarsResult res_scalars_check(const EllipticCurveSpec& E, const BigInt& d, std::uint64_t p, const GroupTable& C2);

/// (1 + p^r)(1 - t) + t #E(F_{p^r}) with t = chi(c^r), checked against the power sums of
/// the reciprocal roots of RS(a, p, chi, c). Throws InternalError on a mismatch.
BigInt c2_point_count(const BigInt& a, std::uint64_t p, const GroupTable& G, const ClassFunction& chi, std::size_t c,
                      unsigned r);

/// Exact forms of abar_1 = abar t, abar_2 = t(abar^2 - 2 + t), abar_3 = abar(abar^2 + t^2 - 3)
/// for a degree-6 factor whose elliptic part has trace a:
/// c1 = -a t, c2 = t(a^2 - 2p + t p), c3 = -a(a^2 + (t^2 - 3) p).
bool normalized_identities_hold(const LocalFactor& L, const BigInt& a, const BigInt& t);

}  // namespace artin
