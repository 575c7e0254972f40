#include "artin/chars/group_table.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "artin/arith/numtheory.hpp"
#include "artin/error.hpp"
#include "artin/util/json_fields.hpp"

namespace artin {

std::size_t GroupTable::class_index(const std::string& label) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].label == label) return i;
    throw NotFound(id + ": no class " + label);
}

std::size_t GroupTable::character_index(const std::string& name) const {
    for (std::size_t i = 0; i < irreducibles.size(); ++i)
        if (irreducibles[i].name() == name) return i;
    throw NotFound(id + ": no character " + name);
}

const Projection& GroupTable::projection(const std::string& name) const {
    for (const auto& p : projections)
        if (p.name == name) return p;
    throw NotFound(id + ": no projection " + name);
}

std::size_t GroupTable::power_class(std::size_t c, long j) const {
    const auto& C = classes.at(c);
    const long r = static_cast<long>(C.order);
    return C.power[static_cast<std::size_t>(((j % r) + r) % r)];
}

ClassFunction GroupTable::make(std::vector<CycloInt> values, std::string name) const {
    if (values.size() != classes.size()) {
        throw PreconditionError(id + ": expected " + std::to_string(classes.size()) + " values, got " +
                                std::to_string(values.size()));
    }
    return ClassFunction(id, std::move(values), std::move(name));
}

ClassFunction GroupTable::trivial() const { return make(std::vector<CycloInt>(classes.size(), CycloInt(1))); }

ClassFunction GroupTable::combination(const std::vector<BigInt>& n) const {
    if (n.size() != irreducibles.size()) throw PreconditionError(id + ": multiplicity vector has the wrong length");
    ClassFunction s = make(std::vector<CycloInt>(classes.size(), CycloInt(0)));
    for (std::size_t i = 0; i < n.size(); ++i)
        if (n[i] != 0) s += CycloInt(n[i]) * irreducibles[i];
    return s;
}

namespace {

// Galois action sigma_j on a value of a class of order r: pick a lift of j mod r prime to the value's conductor.
CycloInt galois_lift(const CycloInt& v, long j, unsigned r) {
    const long m = static_cast<long>(std::lcm<long>(v.conductor(), r));
    for (long k = j; k < j + m * static_cast<long>(r) + 1; k += r) {
        if (std::gcd(k, m) == 1) return v.embed(static_cast<unsigned>(m)).galois(k);
    }
    throw InternalError("no Galois lift");
}

}  // namespace

void GroupTable::validate() const {
    auto fail = [&](const std::string& msg) { throw MalformedTable(id + ": " + msg); };
    if (classes.empty()) fail("no classes");
    if (classes[0].order != 1) fail("the first class must be the identity");
    std::set<std::string> labels;
    for (const auto& c : classes)
        if (!labels.insert(c.label).second) fail("duplicate class label " + c.label);
    if (irreducibles.size() != classes.size()) {
        fail(std::to_string(irreducibles.size()) + " characters for " + std::to_string(classes.size()) + " classes");
    }

    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& C = classes[c];
        if (C.power.size() != C.order) fail(C.label + ": power map has the wrong length");
        if (C.power[0] != 0) fail(C.label + ": sigma^0 must be the identity");
        if (C.order > 1 && C.power[1] != c) fail(C.label + ": sigma^1 must be sigma");
        for (unsigned j = 0; j < C.order; ++j) {
            const auto& D = classes.at(C.power[j]);
            const unsigned want = C.order / std::gcd(j == 0 ? C.order : j, C.order);
            if (D.order != want) {
                fail(C.label + "^" + std::to_string(j) + " = " + D.label + " has order " + std::to_string(D.order) +
                     ", expected " + std::to_string(want));
            }
            for (unsigned k = 0; k < C.order; ++k) {
                if (power_class(C.power[j], k) != power_class(c, static_cast<long>(j) * k)) {
                    fail("power maps of " + C.label + " do not compose");
                }
            }
        }
    }

    for (const auto& chi : irreducibles) {
        if (chi.size() != classes.size()) fail(chi.name() + ": wrong number of values");
        const auto d = chi[0].to_integer();
        if (!d || *d <= 0) fail(chi.name() + ": value at the identity must be a positive integer");
        for (std::size_t c = 0; c < classes.size(); ++c) {
            const auto r = classes[c].order;
            for (unsigned j = 1; j < r; ++j) {
                if (std::gcd(j, r) != 1) continue;
                if (!(chi[power_class(c, j)] == galois_lift(chi[c], j, r))) {
                    fail(chi.name() + ": value at " + classes[power_class(c, j)].label +
                         " is not the Galois conjugate of the value at " + classes[c].label);
                }
            }
            eigenvalue_multiset(*this, chi, c);
        }
    }

    if (!sizes_trusted) return;
    long total = 0;
    for (const auto& c : classes) total += c.size;
    if (total != order) fail("class sizes add up to " + std::to_string(total) + ", not " + std::to_string(order));
    if (classes[0].size != 1) fail("the identity class must have size 1");
    for (std::size_t i = 0; i < irreducibles.size(); ++i) {
        for (std::size_t j = 0; j < irreducibles.size(); ++j) {
            if (inner_product(*this, irreducibles[i], irreducibles[j]) != (i == j ? 1 : 0)) {
                fail("rows " + irreducibles[i].name() + ", " + irreducibles[j].name() + " are not orthonormal");
            }
        }
    }
    for (std::size_t a = 0; a < classes.size(); ++a) {
        for (std::size_t b = 0; b < classes.size(); ++b) {
            CycloInt s = 0;
            for (const auto& chi : irreducibles) s += chi[a] * chi[b].conj();
            const auto v = s.to_integer();
            const BigInt want = a == b ? BigInt(order / classes[a].size) : BigInt(0);
            if (!v || *v != want) fail("columns " + classes[a].label + ", " + classes[b].label + " are not orthogonal");
        }
    }
}

// ---- parsing

namespace {

CycloInt read_value(const jf::json& v, const std::string& path) {
    if (v.is_number_integer() || v.is_string()) return CycloInt(jf::to_bigint(v, path));
    if (!v.is_object()) throw ConfigError(path + ": expected an integer or a cyclotomic literal");
    const long m = jf::to_long(jf::require(v, "m", path), path + ".m");
    if (m <= 0 || m > 1000) throw ConfigError(path + ".m: conductor out of range");
    if (v.contains("coeffs")) {
        std::vector<BigInt> c;
        for (std::size_t i = 0; i < v["coeffs"].size(); ++i)
            c.push_back(jf::to_bigint(v["coeffs"][i], path + ".coeffs[" + std::to_string(i) + "]"));
        try {
            return CycloInt::from_coeffs(static_cast<unsigned>(m), std::move(c));
        } catch (const PreconditionError& e) {
            throw ConfigError(path + ": " + e.what());
        }
    }
    if (v.contains("roots")) {
        // sum of zeta_m^k, one entry per eigenvalue
        CycloInt s = 0;
        for (std::size_t i = 0; i < v["roots"].size(); ++i)
            s += CycloInt::zeta(static_cast<unsigned>(m), jf::to_long(v["roots"][i], path + ".roots"));
        return s;
    }
    throw ConfigError(path + ": cyclotomic literal needs \"coeffs\" or \"roots\"");
}

GroupTable from_json(const jf::json& j, const std::string& source) {
    GroupTable G;
    G.id = jf::to_str(jf::require(j, "id", source), source + ".id");
    const std::string where = source + " (" + G.id + ")";
    G.order = jf::to_long(jf::require(j, "order", where), where + ".order");
    if (j.contains("sizes_trusted")) G.sizes_trusted = j["sizes_trusted"].get<bool>();

    const auto& cls = jf::require_array(j, "classes", where);
    std::vector<std::map<long, std::string>> raw_powers;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const std::string path = where + ".classes[" + std::to_string(i) + "]";
        ConjugacyClass C;
        C.label = jf::to_str(jf::require(cls[i], "label", path), path + ".label");
        C.size = jf::to_long(jf::require(cls[i], "size", path), path + ".size");
        const long ord = jf::to_long(jf::require(cls[i], "order", path), path + ".order");
        if (ord < 1 || ord > 1000) throw ConfigError(path + ".order: out of range");
        C.order = static_cast<unsigned>(ord);
        std::map<long, std::string> pm;
        if (cls[i].contains("power_map")) {
            for (const auto& [k, v] : cls[i]["power_map"].items()) {
                long e = 0;
                try {
                    e = std::stol(k);
                } catch (...) {
                    throw ConfigError(path + ".power_map: key \"" + k + "\" is not an exponent");
                }
                pm[e] = jf::to_str(v, path + ".power_map[\"" + k + "\"]");
            }
        }
        raw_powers.push_back(std::move(pm));
        G.classes.push_back(std::move(C));
    }
    for (std::size_t i = 0; i < G.classes.size(); ++i) {
        auto& C = G.classes[i];
        const std::string path = where + ".classes[" + std::to_string(i) + "].power_map";
        C.power.assign(C.order, 0);
        if (C.order > 1) C.power[1] = i;
        for (unsigned e = 2; e < C.order; ++e) {
            auto it = raw_powers[i].find(e);
            if (it == raw_powers[i].end()) throw ConfigError(path + ": missing exponent " + std::to_string(e));
            try {
                C.power[e] = G.class_index(it->second);
            } catch (const NotFound&) {
                throw ConfigError(path + ": unknown class " + it->second);
            }
        }
        for (const auto& [e, lbl] : raw_powers[i])
            if (e < 2 || e >= static_cast<long>(C.order))
                throw ConfigError(path + ": exponent " + std::to_string(e) + " outside 2.." + std::to_string(C.order - 1));
    }

    const auto& chars = jf::require_array(j, "characters", where);
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const std::string path = where + ".characters[" + std::to_string(i) + "]";
        const std::string name = jf::to_str(jf::require(chars[i], "name", path), path + ".name");
        const auto& vals = jf::require_array(chars[i], "values", path);
        if (vals.size() != G.classes.size()) {
            throw ConfigError(path + ": " + std::to_string(vals.size()) + " values for " +
                              std::to_string(G.classes.size()) + " classes");
        }
        std::vector<CycloInt> v;
        for (std::size_t c = 0; c < vals.size(); ++c) v.push_back(read_value(vals[c], path + ".values[" + std::to_string(c) + "]"));
        G.irreducibles.push_back(G.make(std::move(v), name));
    }

    if (j.contains("projections")) {
        const auto& projs = jf::require_array(j, "projections", where);
        for (std::size_t i = 0; i < projs.size(); ++i) {
            const std::string path = where + ".projections[" + std::to_string(i) + "]";
            Projection P;
            P.name = jf::to_str(jf::require(projs[i], "name", path), path + ".name");
            P.target = jf::to_str(jf::require(projs[i], "target", path), path + ".target");
            const auto& m = jf::require(projs[i], "map", path);
            for (const auto& [k, v] : m.items()) P.map[k] = jf::to_str(v, path + ".map[\"" + k + "\"]");
            G.projections.push_back(std::move(P));
        }
    }
    G.validate();
    return G;
}

}  // namespace

GroupTable parse_group_table(const std::string& text, const std::string& source) {
    return from_json(jf::parse(text, source), source);
}

GroupTable load_group_table(const std::filesystem::path& path) { return from_json(jf::parse_file(path), path.string()); }

// ---- library

GroupLibrary GroupLibrary::load(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw ConfigError("group table directory " + dir.string() + " does not exist");
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    GroupLibrary lib;
    for (const auto& f : files) lib.add(load_group_table(f));
    lib.check_projections();
    return lib;
}

void GroupLibrary::add(GroupTable g) {
    const std::string id = g.id;
    if (!tables_.emplace(id, std::move(g)).second) throw ConfigError("group " + id + " registered twice");
}

const GroupTable& GroupLibrary::get(const std::string& id) const {
    auto it = tables_.find(id);
    if (it == tables_.end()) throw ConfigError("no group table with id " + id);
    return it->second;
}

std::vector<std::string> GroupLibrary::ids() const {
    std::vector<std::string> r;
    for (const auto& [k, v] : tables_) r.push_back(k);
    return r;
}

void GroupLibrary::check_projections() const {
    for (const auto& [gid, G] : tables_) {
        for (const auto& P : G.projections) {
            const GroupTable& Q = get(P.target);
            const std::string where = gid + " projection " + P.name + " onto " + Q.id;
            std::vector<std::size_t> img(G.classes.size());
            std::set<std::size_t> hit;
            for (std::size_t c = 0; c < G.classes.size(); ++c) {
                auto it = P.map.find(G.classes[c].label);
                if (it == P.map.end()) throw MalformedTable(where + ": class " + G.classes[c].label + " is not mapped");
                try {
                    img[c] = Q.class_index(it->second);
                } catch (const NotFound&) {
                    throw MalformedTable(where + ": unknown target class " + it->second);
                }
                hit.insert(img[c]);
            }
            if (P.map.size() != G.classes.size()) throw MalformedTable(where + ": map has labels outside the group");
            if (hit.size() != Q.classes.size()) throw MalformedTable(where + ": not surjective on classes");
            for (std::size_t c = 0; c < G.classes.size(); ++c) {
                if (G.classes[c].order % Q.classes[img[c]].order != 0) {
                    throw MalformedTable(where + ": order of the image of " + G.classes[c].label + " does not divide");
                }
                for (unsigned j = 0; j < G.classes[c].order; ++j) {
                    if (img[G.power_class(c, j)] != Q.power_class(img[c], j)) {
                        throw MalformedTable(where + ": not compatible with power maps at " + G.classes[c].label);
                    }
                }
            }
            for (const auto& chi : Q.irreducibles) {
                const ClassFunction inf = inflate(*this, G, P.name, chi);
                bool found = false;
                for (const auto& psi : G.irreducibles) found = found || psi == inf;
                if (!found) throw MalformedTable(where + ": inflation of " + chi.name() + " is not irreducible");
            }
        }
    }
}

// ---- calculus

Rational inner_product(const GroupTable& G, const ClassFunction& a, const ClassFunction& b) {
    if (!G.sizes_trusted) throw PreconditionError(G.id + ": class sizes are untrusted; use pointwise identities");
    if (a.group() != G.id || b.group() != G.id) throw PreconditionError("inner_product: class function from another group");
    CycloInt s = 0;
    for (std::size_t c = 0; c < G.classes.size(); ++c) s += CycloInt(G.classes[c].size) * a[c] * b[c].conj();
    const auto v = s.to_integer();
    if (!v) throw PreconditionError("inner_product is not rational: " + s.to_string());
    Rational q(*v, BigInt(G.order));
    q.canonicalize();
    return q;
}

std::vector<BigInt> Decomposition::integral() const {
    std::vector<BigInt> n;
    for (const auto& q : multiplicity) {
        if (q.get_den() != 1) throw PreconditionError("non-integral multiplicity " + artin::to_string(q));
        n.push_back(q.get_num());
    }
    return n;
}

std::string Decomposition::to_string(const GroupTable& G) const {
    std::string s;
    for (std::size_t i = 0; i < multiplicity.size(); ++i) {
        if (multiplicity[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (multiplicity[i] != 1) s += artin::to_string(multiplicity[i]) + "*";
        s += G.irreducibles[i].name();
    }
    return s.empty() ? "0" : s;
}

namespace {

void mark_character(Decomposition& d) {
    d.is_character = true;
    for (const auto& q : d.multiplicity)
        if (q.get_den() != 1 || q < 0) d.is_character = false;
}

std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> A, const std::string& id) {
    // A is rows x (k + 1), last column the right-hand side
    const std::size_t rows = A.size(), k = A.empty() ? 0 : A[0].size() - 1;
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t col = 0; col < k && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && A[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[r]);
        const Rational inv = 1 / A[r][col];
        for (auto& x : A[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][col] == 0) continue;
            const Rational f = A[i][col];
            for (std::size_t t = col; t <= k; ++t) A[i][t] -= f * A[r][t];
        }
        pivcol.push_back(col);
        ++r;
    }
    if (pivcol.size() < k) throw MalformedTable(id + ": character columns are linearly dependent (singular system)");
    for (std::size_t i = r; i < rows; ++i)
        if (A[i][k] != 0) throw PreconditionError(id + ": class function has no rational decomposition");
    std::vector<Rational> x(k);
    for (std::size_t i = 0; i < k; ++i) x[pivcol[i]] = A[i][k];
    return x;
}

}  // namespace

Decomposition decompose(const GroupTable& G, const ClassFunction& chi, DecomposeMode mode) {
    if (chi.group() != G.id) throw PreconditionError("decompose: " + chi.group() + " class function on " + G.id);
    Decomposition d;
    if (mode == DecomposeMode::orthogonality) {
        for (const auto& psi : G.irreducibles) d.multiplicity.push_back(inner_product(G, chi, psi));
        mark_character(d);
        return d;
    }
    unsigned M = 1;
    for (const auto& x : chi.values()) M = std::lcm(M, x.conductor());
    for (const auto& psi : G.irreducibles)
        for (const auto& x : psi.values()) M = std::lcm(M, x.conductor());
    const std::size_t dim = euler_phi(M), k = G.irreducibles.size();
    std::vector<std::vector<Rational>> A;
    for (std::size_t c = 0; c < G.classes.size(); ++c) {
        std::vector<std::vector<BigInt>> cols;
        for (const auto& psi : G.irreducibles) cols.push_back(psi[c].embed(M).coeffs());
        const auto rhs = chi[c].embed(M).coeffs();
        for (std::size_t t = 0; t < dim; ++t) {
            std::vector<Rational> row(k + 1);
            for (std::size_t i = 0; i < k; ++i) row[i] = Rational(cols[i][t]);
            row[k] = Rational(rhs[t]);
            A.push_back(std::move(row));
        }
    }
    d.multiplicity = solve_rational(std::move(A), G.id);
    mark_character(d);
    return d;
}

std::vector<unsigned> EigenvalueMultiset::exponents() const {
    std::vector<unsigned> e;
    for (unsigned k = 0; k < mult.size(); ++k)
        for (long t = 0; t < mult[k]; ++t) e.push_back(k);
    return e;
}

CycloInt EigenvalueMultiset::sum() const {
    CycloInt s = 0;
    for (unsigned k = 0; k < mult.size(); ++k)
        if (mult[k]) s += CycloInt(mult[k]) * CycloInt::zeta(order, k);
    return s;
}

std::string EigenvalueMultiset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (unsigned k : exponents()) {
        if (!first) s += ", ";
        first = false;
        if (k == 0)
            s += "1";
        else if (2 * k == order)
            s += "-1";
        else
            s += "z" + std::to_string(order) + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s + "}";
}

EigenvalueMultiset eigenvalue_multiset(const GroupTable& G, const ClassFunction& chi, std::size_t c) {
    if (chi.group() != G.id) throw PreconditionError("eigenvalue_multiset: class function from another group");
    const unsigned r = G.classes.at(c).order;
    EigenvalueMultiset e;
    e.order = r;
    e.mult.assign(r, 0);
    long total = 0;
    for (unsigned k = 0; k < r; ++k) {
        CycloInt s = 0;
        for (unsigned j = 0; j < r; ++j) s += chi[G.power_class(c, j)] * CycloInt::zeta(r, -static_cast<long>(k * j));
        const auto v = s.to_integer();
        if (!v || *v % r != 0 || *v < 0) {
            throw MalformedTable(G.id + ": " + (chi.name().empty() ? chi.to_string() : chi.name()) + " at " +
                                 G.classes[c].label + ": eigenvalue multiplicity " + s.to_string() + "/" +
                                 std::to_string(r) + " is not a nonnegative integer");
        }
        e.mult[k] = BigInt(*v / r).get_si();
        total += e.mult[k];
    }
    if (BigInt(total) != chi.degree()) throw MalformedTable(G.id + ": eigenvalue count differs from the degree");
    return e;
}

ClassFunction inflate(const GroupLibrary& lib, const GroupTable& G, const std::string& projection,
                      const ClassFunction& chi) {
    const Projection& P = G.projection(projection);
    const GroupTable& Q = lib.get(P.target);
    if (chi.group() != Q.id) {
        throw PreconditionError("inflate along " + projection + " needs a class function on " + Q.id + ", got " + chi.group());
    }
    std::vector<CycloInt> v;
    for (const auto& C : G.classes) v.push_back(chi[Q.class_index(P.map.at(C.label))]);
    return G.make(std::move(v), chi.name().empty() ? "" : "Inf(" + chi.name() + ")");
}

std::vector<std::string> kernel_classes(const GroupTable& G, const ClassFunction& chi) {
    std::vector<std::string> k;
    for (std::size_t c = 0; c < G.classes.size(); ++c)
        if (chi[c] == chi[0]) k.push_back(G.classes[c].label);
    return k;
}

bool is_faithful(const GroupTable& G, const ClassFunction& chi) { return kernel_classes(G, chi).size() == 1; }

}  // namespace artin
