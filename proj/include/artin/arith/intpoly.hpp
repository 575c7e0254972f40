#pragma once

#include <string>
#include <utility>

#include "artin/arith/bigint.hpp"
#include "artin/arith/poly.hpp"

namespace artin {

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rational>;

BigInt discriminant(const IntPoly& f);

/// Polynomial whose reciprocal roots are all products alpha_i * beta_j of the
/// reciprocal roots of f and g; both inputs must have constant term 1.
IntPoly composed_product(const IntPoly& f, const IntPoly& g);

RatPoly to_rational(const IntPoly& f);

/// Quotient and remainder of division over Q.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// True when g divides f in Q[T] with integral quotient.
bool divides(const IntPoly& g, const IntPoly& f);

/// Power sums s_1..s_count of the reciprocal roots of f (constant term 1), by Newton's identities.
std::vector<BigInt> reciprocal_root_power_sums(const IntPoly& f, unsigned count);

std::string to_string(const IntPoly& f, const std::string& var = "T");

}  // namespace artin
