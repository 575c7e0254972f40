#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "artin/chars/group_table.hpp"
#include "artin/curves/elliptic.hpp"
#include "artin/frobenius/s4_field.hpp"
#include "artin/lfun/local_factor.hpp"

namespace artin {

/// dim of the invariants of theta under the normal subgroup formed by `classes`
/// must equal `dim`. An empty class list stands for the whole group.
struct HomConstraint {
    std::vector<std::string> classes;
    long dim = 0;

    std::string to_string() const;
};

/// "trivial:6" (whole group) or "1a+2a+3a:0".
HomConstraint parse_hom_constraint(const std::string& s);

struct ConstraintRecord {
    std::uint64_t p = 0;
    std::size_t cls = 0;
    LocalFactor left;
    LocalFactor right;
};

struct ThetaProblem {
    const GroupTable* group = nullptr;
    long dim = 0;
    std::string left_label;
    std::string right_label;
    std::vector<ConstraintRecord> records;  // increasing p
    std::vector<HomConstraint> hom;

    /// Throws PreconditionError on D <= 0, a missing group or non-elliptic left factors.
    void validate() const;
};

/// Nonnegative multiplicity per irreducible.
using Multiplicities = std::vector<long>;

ClassFunction to_character(const GroupTable& G, const Multiplicities& n);
std::string to_string(const GroupTable& G, const Multiplicities& n);

/// (1/|H|) sum over h in H of chi(h); PreconditionError unless sizes are trusted and
/// the classes form a normal subgroup.
Rational invariant_dimension(const GroupTable& G, const ClassFunction& chi, const std::vector<std::string>& classes);

/// Frobenius class index of a good prime; throws RamifiedPrime.
using ClassSource = std::function<std::size_t(std::uint64_t)>;
/// Right-hand local factor at p for the given class; throws BadReduction.
using FactorSource = std::function<LocalFactor(std::uint64_t, std::size_t)>;

/// Classes of S4 from the factorization pattern of F; PreconditionError for another table.
ClassSource s4_classes(const GroupTable& S4, const S4Field& F);
/// 1a / 2a of Gal(Q(sqrt d)/Q); d squarefree, not 1, and a table of order 2.
ClassSource quadratic_classes(const GroupTable& C2, const BigInt& d);

/// RS(E, chi at class(p)).
FactorSource rankin_selberg_factor(const GroupTable& G, const EllipticCurveSpec& E, const ClassFunction& chi,
                                   const std::string& label);
/// Product of point-counted elliptic factors.
FactorSource product_factor(std::vector<EllipticCurveSpec> curves, const std::string& label);

/// Records for every prime 5 <= p <= max_p that is good for the left curve, unramified and
/// good for the right source.
ThetaProblem build_problem(const GroupTable& G, long dim, const EllipticCurveSpec& left, const ClassSource& classes,
                           const FactorSource& right, const std::string& right_label, std::uint64_t max_p,
                           std::vector<HomConstraint> hom = {}, unsigned workers = 0);

inline constexpr long kMaxCandidateDim = 30;

/// Every multiplicity vector of total dimension P.dim (bounded componentwise by `upper` when
/// given) satisfying the Hom constraints. PreconditionError when D > 30.
std::vector<Multiplicities> enumerate_candidates(const ThetaProblem& P,
                                                 const std::optional<Multiplicities>& upper = std::nullopt);

struct Elimination {
    Multiplicities candidate;
    std::optional<std::uint64_t> prime;  // empty when removed before any prime
    std::string reason;
};

struct FilterResult {
    std::vector<Multiplicities> survivors;
    std::vector<Elimination> eliminated;
};

/// With h = deg(right)/2 and g = D/h, a candidate n survives iff g divides every n_i and
/// RS(left, n/g at class(p)) = right at every record. Throws InconsistentData when nothing
/// survives and InternalError when a survivor is not self-dual and rational.
FilterResult rs_consistency_filter(const std::vector<Multiplicities>& candidates, const ThetaProblem& P,
                                   unsigned workers = 0);

struct ThetaSolution {
    std::size_t candidate_count = 0;
    FilterResult filter;
    std::size_t supersingular_records = 0;
    /// Survivors when records with a = 0 are dropped; must coincide with the full answer.
    std::vector<Multiplicities> survivors_without_supersingular;

    bool unique() const { return filter.survivors.size() == 1; }
};

ThetaSolution solve(const ThetaProblem& P, unsigned workers = 0);

/// Componentwise n(a) <= n(b) after linear-solve decomposition; PreconditionError on a
/// non-integral decomposition.
bool contained_in(const GroupTable& G, const ClassFunction& a, const ClassFunction& b);

/// theta23 inside theta12 (x) theta13.
bool transitivity_bound(const GroupTable& G, const ClassFunction& theta12, const ClassFunction& theta13,
                        const ClassFunction& theta23);

/// dim_Q Hom_Q(prod A_i, prod B_j) for non-CM elliptic factors, counting Q-isogenous pairs
/// by equal traces at every good prime up to `bound`. PreconditionError on a CM factor.
long hom_dimension_q(const std::vector<EllipticCurveSpec>& A, const std::vector<EllipticCurveSpec>& B,
                     std::uint64_t bound = 1000);

}  // namespace artin
