#include "artin/lfun/local_factor.hpp"

#include <cmath>

#include "artin/arith/numtheory.hpp"
#include "artin/error.hpp"

namespace artin {

LocalFactor::LocalFactor(std::string label, std::uint64_t p, unsigned genus, IntPoly poly)
    : label_(std::move(label)), p_(p), genus_(genus), poly_(std::move(poly)) {
    if (poly_.is_zero() || poly_[0] != 1) {
        throw PreconditionError("local factor " + label_ + " at p = " + std::to_string(p_) +
                                ": constant term must be 1");
    }
    if (poly_.degree() != static_cast<int>(2 * genus_)) {
        throw PreconditionError("local factor " + label_ + " at p = " + std::to_string(p_) + ": degree " +
                                std::to_string(poly_.degree()) + " but genus " + std::to_string(genus_));
    }
}

std::vector<long double> LocalFactor::normalized() const {
    std::vector<long double> out(2 * genus_ + 1);
    const long double sp = std::sqrt(static_cast<long double>(p_));
    long double scale = 1;
    for (unsigned i = 0; i <= 2 * genus_; ++i) {
        const long double c = poly_[i].get_d();
        out[i] = ((i & 1) ? -c : c) / scale;
        scale *= sp;
    }
    return out;
}

bool LocalFactor::has_functional_equation() const {
    const BigInt p = from_u64(p_);
    for (unsigned i = 0; i < genus_; ++i) {
        if (poly_[2 * genus_ - i] != pow(p, genus_ - i) * poly_[i]) return false;
    }
    return true;
}

bool LocalFactor::within_weil_bounds() const {
    const BigInt p = from_u64(p_);
    for (unsigned i = 0; i <= 2 * genus_; ++i) {
        const BigInt b = binomial(2 * genus_, i);
        if (poly_[i] * poly_[i] > b * b * pow(p, i)) return false;
    }
    return true;
}

void LocalFactor::check_invariants() const {
    const std::string where = label_ + " at p = " + std::to_string(p_) + " (" + to_string() + ")";
    if (!has_functional_equation()) throw InternalError("functional equation fails for " + where);
    if (!within_weil_bounds()) throw InternalError("Weil bound fails for " + where);
}

IntPoly elliptic_poly(const BigInt& a, std::uint64_t p) { return IntPoly{BigInt(1), BigInt(-a), from_u64(p)}; }

}  // namespace artin
