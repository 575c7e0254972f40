#include "artin/theta/solver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "artin/arith/numtheory.hpp"
#include "artin/error.hpp"
#include "artin/lfun/rankin_selberg.hpp"
#include "artin/util/parallel.hpp"

namespace artin {

std::string HomConstraint::to_string() const {
    std::string s;
    if (classes.empty()) {
        s = "trivial";
    } else {
        for (const auto& c : classes) s += (s.empty() ? "" : "+") + c;
    }
    return s + ":" + std::to_string(dim);
}

HomConstraint parse_hom_constraint(const std::string& s) {
    const auto colon = s.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
        throw ConfigError("hom constraint \"" + s + "\": expected <classes>:<dim>");
    HomConstraint h;
    try {
        std::size_t used = 0;
        h.dim = std::stol(s.substr(colon + 1), &used);
        if (used != s.size() - colon - 1) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw ConfigError("hom constraint \"" + s + "\": bad dimension");
    }
    if (h.dim < 0) throw ConfigError("hom constraint \"" + s + "\": negative dimension");
    const std::string head = s.substr(0, colon);
    if (head == "trivial") return h;
    std::stringstream in(head);
    std::string part;
    while (std::getline(in, part, '+')) {
        if (part.empty()) throw ConfigError("hom constraint \"" + s + "\": empty class label");
        h.classes.push_back(part);
    }
    return h;
}

void ThetaProblem::validate() const {
    if (!group) throw PreconditionError("theta problem without a group table");
    if (dim <= 0) throw PreconditionError("theta problem: dimension must be positive");
    for (const auto& r : records) {
        if (r.left.genus() != 1) throw PreconditionError("theta problem: left factors must be elliptic");
        if (r.cls >= group->classes.size()) throw PreconditionError("theta problem: class index out of range");
    }
}

ClassFunction to_character(const GroupTable& G, const Multiplicities& n) {
    std::vector<BigInt> b(n.begin(), n.end());
    return G.combination(b);
}

std::string to_string(const GroupTable& G, const Multiplicities& n) {
    Decomposition d;
    for (long x : n) d.multiplicity.emplace_back(x);
    return d.to_string(G);
}

Rational invariant_dimension(const GroupTable& G, const ClassFunction& chi, const std::vector<std::string>& classes) {
    if (!G.sizes_trusted) throw PreconditionError(G.id + ": invariant dimensions need trusted class sizes");
    std::vector<std::size_t> idx;
    if (classes.empty()) {
        for (std::size_t c = 0; c < G.classes.size(); ++c) idx.push_back(c);
    } else {
        for (const auto& l : classes) idx.push_back(G.class_index(l));
    }
    std::set<std::size_t> H(idx.begin(), idx.end());
    if (!H.count(0)) throw PreconditionError(G.id + ": subgroup classes must contain the identity");
    long order = 0;
    CycloInt sum(0);
    for (auto c : H) {
        order += G.classes[c].size;
        sum = sum + CycloInt(G.classes[c].size) * chi[c];
        for (long j = 2; j < static_cast<long>(G.classes[c].order); ++j)
            if (!H.count(G.power_class(c, j)))
                throw PreconditionError(G.id + ": classes do not form a subgroup");
    }
    if (G.order % order != 0) throw PreconditionError(G.id + ": subgroup order does not divide the group order");
    const auto s = sum.to_integer();
    if (!s) throw PreconditionError(G.id + ": classes are not closed under Galois conjugation");
    Rational r(*s, BigInt(order));
    r.canonicalize();
    return r;
}

ClassSource s4_classes(const GroupTable& S4, const S4Field& F) {
    if (S4.order != 24) throw PreconditionError("quartic-field classes need the S4 table, got " + S4.id);
    return [&S4, F](std::uint64_t p) { return S4.class_index(frobenius_class(F, p).cls); };
}

ClassSource quadratic_classes(const GroupTable& C2, const BigInt& d) {
    if (C2.order != 2) throw PreconditionError("quadratic-field classes need a group of order 2, got " + C2.id);
    if (d == 0 || d == 1 || !is_squarefree(d)) throw PreconditionError("quadratic field needs squarefree d != 0, 1");
    const BigInt disc = mod_u64(d, 4) == 1 ? d : BigInt(4 * d);
    const std::size_t split = C2.class_index("1a"), inert = C2.class_index("2a");
    return [disc, split, inert](std::uint64_t p) {
        if (mod_u64(disc, p) == 0) throw RamifiedPrime(p);
        return kronecker(disc, BigInt(from_u64(p))) == 1 ? split : inert;
    };
}

FactorSource rankin_selberg_factor(const GroupTable& G, const EllipticCurveSpec& E, const ClassFunction& chi,
                                   const std::string& label) {
    return [&G, E, chi, label](std::uint64_t p, std::size_t c) {
        if (E.is_bad(p)) throw BadReduction(p, E.label);
        return rankin_selberg_elliptic(ap(E, p), p, G, chi, c, label);
    };
}

FactorSource product_factor(std::vector<EllipticCurveSpec> curves, const std::string& label) {
    return [curves, label](std::uint64_t p, std::size_t) {
        IntPoly f{1};
        for (const auto& E : curves) {
            if (E.is_bad(p)) throw BadReduction(p, E.label);
            f = f * elliptic_poly(ap(E, p), p);
        }
        return LocalFactor(label, p, static_cast<unsigned>(curves.size()), f);
    };
}

ThetaProblem build_problem(const GroupTable& G, long dim, const EllipticCurveSpec& left, const ClassSource& classes,
                           const FactorSource& right, const std::string& right_label, std::uint64_t max_p,
                           std::vector<HomConstraint> hom, unsigned workers) {
    ThetaProblem P;
    P.group = &G;
    P.dim = dim;
    P.left_label = left.label;
    P.right_label = right_label;
    P.hom = std::move(hom);
    const auto primes = primes_in(5, max_p);
    auto rec = parallel_map(primes, workers, [&](std::uint64_t p) -> std::optional<ConstraintRecord> {
        if (left.is_bad(p)) return std::nullopt;
        try {
            const std::size_t c = classes(p);
            LocalFactor R = right(p, c);
            return ConstraintRecord{p, c, local_factor(left, p), std::move(R)};
        } catch (const RamifiedPrime&) {
            return std::nullopt;
        } catch (const BadReduction&) {
            return std::nullopt;
        }
    });
    for (auto& r : rec)
        if (r) P.records.push_back(std::move(*r));
    P.validate();
    return P;
}

namespace {

void enumerate_rec(const std::vector<long>& deg, const std::optional<Multiplicities>& upper, std::size_t i,
                   long left, Multiplicities& cur, std::vector<Multiplicities>& out) {
    if (i == deg.size()) {
        if (left == 0) out.push_back(cur);
        return;
    }
    long cap = left / deg[i];
    if (upper) cap = std::min(cap, (*upper)[i]);
    for (long n = 0; n <= cap; ++n) {
        cur[i] = n;
        enumerate_rec(deg, upper, i + 1, left - n * deg[i], cur, out);
    }
    cur[i] = 0;
}

}  // namespace

std::vector<Multiplicities> enumerate_candidates(const ThetaProblem& P, const std::optional<Multiplicities>& upper) {
    if (!P.group) throw PreconditionError("theta problem without a group table");
    const GroupTable& G = *P.group;
    if (P.dim <= 0) throw PreconditionError("candidate dimension must be positive");
    if (P.dim > kMaxCandidateDim)
        throw PreconditionError("candidate dimension " + std::to_string(P.dim) + " exceeds the guard " +
                                std::to_string(kMaxCandidateDim));
    if (upper && upper->size() != G.irreducibles.size())
        throw PreconditionError("upper bound has the wrong length");
    std::vector<long> deg;
    for (const auto& chi : G.irreducibles) deg.push_back(chi.degree().get_si());

    // invariant dimension contributed by each irreducible, per constraint
    std::vector<std::vector<Rational>> inv;
    for (const auto& h : P.hom) {
        std::vector<Rational> row;
        for (const auto& chi : G.irreducibles) row.push_back(invariant_dimension(G, chi, h.classes));
        inv.push_back(row);
    }

    std::vector<Multiplicities> all;
    Multiplicities cur(deg.size(), 0);
    enumerate_rec(deg, upper, 0, P.dim, cur, all);

    std::vector<Multiplicities> out;
    for (auto& n : all) {
        bool ok = true;
        for (std::size_t k = 0; k < P.hom.size() && ok; ++k) {
            Rational s = 0;
            for (std::size_t i = 0; i < n.size(); ++i) s += n[i] * inv[k][i];
            ok = s == P.hom[k].dim;
        }
        if (ok) out.push_back(std::move(n));
    }
    return out;
}

namespace {

Elimination check_candidate(const GroupTable& G, const Multiplicities& n, const ThetaProblem& P) {
    Elimination e{n, std::nullopt, ""};
    if (P.records.empty()) return e;
    const unsigned h = P.records.front().right.genus();
    const long g = P.dim / static_cast<long>(h);
    for (long x : n)
        if (x % g != 0) {
            e.reason = "multiplicities not divisible by " + std::to_string(g);
            return e;
        }
    Multiplicities m(n);
    for (auto& x : m) x /= g;
    const ClassFunction psi = to_character(G, m);
    for (const auto& r : P.records) {
        const LocalFactor rs = rankin_selberg_elliptic(-r.left.coeff(1), r.p, G, psi, r.cls);
        if (rs.poly() != r.right.poly()) {
            e.prime = r.p;
            e.reason = "RS(" + P.left_label + ", " + to_string(G, m) + " at " + G.classes[r.cls].label +
                       ") = " + rs.to_string() + " but " + P.right_label + " = " + r.right.to_string();
            return e;
        }
    }
    return e;
}

}  // namespace

FilterResult rs_consistency_filter(const std::vector<Multiplicities>& candidates, const ThetaProblem& P,
                                   unsigned workers) {
    P.validate();
    const GroupTable& G = *P.group;
    if (!P.records.empty()) {
        const unsigned h = P.records.front().right.genus();
        for (const auto& r : P.records)
            if (r.right.genus() != h) throw PreconditionError("theta problem: right factors of mixed degree");
        if (P.dim % h != 0)
            throw PreconditionError("theta problem: dimension " + std::to_string(P.dim) +
                                    " is not a multiple of the right genus " + std::to_string(h));
    }
    std::vector<std::size_t> idx(candidates.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    const auto verdicts =
        parallel_map(idx, workers, [&](std::size_t i) { return check_candidate(G, candidates[i], P); });

    FilterResult out;
    for (const auto& v : verdicts) {
        if (v.reason.empty())
            out.survivors.push_back(v.candidate);
        else
            out.eliminated.push_back(v);
    }
    if (out.survivors.empty())
        throw InconsistentData("no candidate of dimension " + std::to_string(P.dim) + " is consistent with " +
                               P.left_label + " -> " + P.right_label);
    for (const auto& s : out.survivors) {
        const ClassFunction chi = to_character(G, s);
        if (!chi.is_rational() || !(dual(chi) == chi))
            throw InternalError("survivor " + to_string(G, s) + " is not a rational self-dual character");
    }
    return out;
}

ThetaSolution solve(const ThetaProblem& P, unsigned workers) {
    ThetaSolution S;
    const auto cands = enumerate_candidates(P);
    S.candidate_count = cands.size();
    S.filter = rs_consistency_filter(cands, P, workers);

    ThetaProblem ordinary = P;
    ordinary.records.clear();
    for (const auto& r : P.records) {
        if (r.left.coeff(1) == 0)
            ++S.supersingular_records;
        else
            ordinary.records.push_back(r);
    }
    try {
        S.survivors_without_supersingular = rs_consistency_filter(cands, ordinary, workers).survivors;
    } catch (const InconsistentData&) {
        S.survivors_without_supersingular.clear();
    }
    return S;
}

namespace {

std::vector<BigInt> integral_decomposition(const GroupTable& G, const ClassFunction& chi) {
    const Decomposition d = decompose(G, chi, DecomposeMode::linear_solve);
    if (!d.is_character) throw PreconditionError("non-integer decomposition: " + d.to_string(G));
    return d.integral();
}

}  // namespace

bool contained_in(const GroupTable& G, const ClassFunction& a, const ClassFunction& b) {
    const auto na = integral_decomposition(G, a), nb = integral_decomposition(G, b);
    for (std::size_t i = 0; i < na.size(); ++i)
        if (na[i] > nb[i]) return false;
    return true;
}

bool transitivity_bound(const GroupTable& G, const ClassFunction& theta12, const ClassFunction& theta13,
                        const ClassFunction& theta23) {
    return contained_in(G, theta23, tensor(theta12, theta13));
}

long hom_dimension_q(const std::vector<EllipticCurveSpec>& A, const std::vector<EllipticCurveSpec>& B,
                     std::uint64_t bound) {
    for (const auto* side : {&A, &B})
        for (const auto& E : *side)
            if (has_cm(E)) throw PreconditionError(E.label + " has complex multiplication");
    const auto primes = primes_in(5, bound);
    auto isogenous = [&](const EllipticCurveSpec& E, const EllipticCurveSpec& F) {
        for (auto p : primes) {
            if (E.is_bad(p) || F.is_bad(p)) continue;
            if (ap(E, p) != ap(F, p)) return false;
        }
        return true;
    };
    long dim = 0;
    for (const auto& E : A)
        for (const auto& F : B)
            if (isogenous(E, F)) ++dim;
    return dim;
}

}  // namespace artin
