#include "artin/harness/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "artin/arith/numtheory.hpp"
#include "artin/curves/quartic.hpp"
#include "artin/error.hpp"
#include "artin/lfun/rankin_selberg.hpp"
#include "artin/theta/theta_table.hpp"
#include "artin/util/parallel.hpp"

namespace artin {

Context::Context(RunConfig cfg) : cfg_(std::move(cfg)) {
    cfg_.validate();
    lib_ = GroupLibrary::load(cfg_.groups);
    for (const char* id : {"S4", "C2", "G288"})
        if (!lib_.contains(id)) throw ConfigError("group table " + std::string(id) + " not loaded");
    if (cfg_.strict_table2) {
        GroupTable g = lib_.get("G288");
        g.sizes_trusted = true;
        try {
            g.validate();
        } catch (const MalformedTable& e) {
            throw ConfigError(std::string("strict-table2: ") + e.what());
        }
    }
    reg_ = load_registry(cfg_.registry);
    for (const char* label : {"21.A1", "63.A2"}) {
        try {
            reg_.curve(label);
        } catch (const NotFound&) {
            throw ConfigError("registry has no curve " + std::string(label));
        }
    }
}

const S4Field& Context::field() {
    if (!f_) {
        if (cfg_.quartic) {
            const auto& q = *cfg_.quartic;
            f_ = S4Field::from_coeffs(q[0], q[1], q[2], q[3]);
        } else {
            f_ = find_s4_quartic(cfg_.search_height);
        }
    }
    return *f_;
}

const S4Field& Context::field2() {
    if (!f2_) {
        if (cfg_.quartic2) {
            const auto& q = *cfg_.quartic2;
            f2_ = S4Field::from_coeffs(q[0], q[1], q[2], q[3]);
            if (same_cubic_field(field(), *f2_))
                throw PreconditionError("the two quartics define the same resolvent field");
        } else {
            f2_ = find_s4_quartic(cfg_.search_height, {field()});
        }
    }
    return *f2_;
}

const std::vector<PrimeSample>& Context::moment_samples() {
    if (!samples_) {
        const auto& S4 = lib_.get("S4");
        samples_ = collect_samples(reg_.curve("63.A2"), field(), S4, S4.character("chi4"),
                                   {cfg_.moment_primes, cfg_.include_supersingular, cfg_.workers});
    }
    return *samples_;
}

namespace {

// Collects mismatches and keeps the first few for the detail line.
struct Tally {
    long total = 0;
    long bad = 0;
    std::string first;

    void add(bool ok, const std::string& what) {
        ++total;
        if (ok) return;
        if (bad < 3) first += (first.empty() ? "" : "; ") + what;
        ++bad;
    }
    std::string summary(const std::string& unit) const {
        std::string s = std::to_string(total - bad) + "/" + std::to_string(total) + " " + unit + " agree";
        if (bad) s += "; first failures: " + first;
        return s;
    }
};

std::string str(const BigInt& x) { return x.get_str(); }

void c1_identity(Context& ctx, CheckResult& r) {
    const auto& C1 = ctx.registry().quartic("C1");
    const auto& E21 = ctx.registry().curve("21.A1");
    const auto& E63 = ctx.registry().curve("63.A2");
    Tally t;
    long twist_fits = 0;
    for (auto p : primes_in(5, 199)) {
        if (p == 7) continue;
        const BigInt n = from_u64(count_quartic(C1, p));
        const long a21 = ap(E21, p);
        const BigInt want = BigInt(1 + static_cast<long>(p) - 3 * a21);
        t.add(n == want, "p=" + std::to_string(p) + ": #C1=" + str(n) + ", 1+p-3a21=" + str(want));
        if (n == BigInt(1 + static_cast<long>(p) - 3 * ap(E63, p))) ++twist_fits;
        Record rec;
        rec.set("p", static_cast<std::int64_t>(p)).set("count", n).set("expected", want).set("pass", n == want);
        r.records.push_back(rec);
    }
    r.pass = t.bad == 0;
    r.detail = t.summary("primes") + " (" + std::to_string(twist_fits) + "/" + std::to_string(t.total) +
               " fit 1+p-3a63 instead)";
}

void twist_relation(Context& ctx, CheckResult& r) {
    const auto& E21 = ctx.registry().curve("21.A1");
    const auto& E63 = ctx.registry().curve("63.A2");
    Tally t;
    for (auto p : primes_in(5, 500)) {
        if (E21.is_bad(p) || E63.is_bad(p)) continue;
        const long a21 = ap(E21, p), a63 = ap(E63, p);
        const int chi = kronecker(BigInt(-3), from_u64(p));
        t.add(a63 == chi * a21, "p=" + std::to_string(p) + ": a63=" + std::to_string(a63) +
                                    ", (-3|p)a21=" + std::to_string(chi * a21));
    }
    r.pass = t.bad == 0 && t.total > 0;
    r.detail = t.summary("good primes");
}

void cubic_base_change(Context& ctx, CheckResult& r) {
    Tally t;
    for (const char* label : {"21.A1", "63.A2"}) {
        const auto& E = ctx.registry().curve(label);
        for (std::uint64_t p : {5, 7, 11, 13}) {
            if (E.is_bad(p)) continue;
            const BigInt a = ap(E, p), P = from_u64(p);
            const BigInt want = 1 + P * P * P - a * a * a + 3 * a * P;
            const BigInt got = count_points_ext(E, p, 3, CountMode::enumerate);
            t.add(got == want, std::string(label) + " p=" + std::to_string(p) + ": enumerated " + str(got) +
                                   ", formula " + str(want));
        }
    }
    r.pass = t.bad == 0 && t.total > 0;
    r.detail = t.summary("(curve, p) pairs");
}

void quadratic_rs(Context& ctx, CheckResult& r) {
    const auto& C2 = ctx.lib().get("C2");
    const auto& E = ctx.registry().curve("21.A1");
    const auto& chi = C2.character("chi_q");
    Tally t;
    for (long d : {-3L, 5L, -7L}) {
        const EllipticCurveSpec Ed = quadratic_twist(E, d);
        const std::size_t split = C2.class_index("1a"), inert = C2.class_index("2a");
        for (auto p : primes_in(3, 200)) {
            if (E.is_bad(p) || d % static_cast<long>(p) == 0 || Ed.is_bad(p)) continue;
            const std::size_t c = kronecker(BigInt(d), from_u64(p)) == 1 ? split : inert;
            const auto rs = rankin_selberg_elliptic(ap(E, p), p, C2, chi, c);
            const auto tw = local_factor(Ed, p);
            t.add(rs.poly() == tw.poly(), "d=" + std::to_string(d) + " p=" + std::to_string(p) + ": RS " +
                                              rs.to_string() + " vs twist " + tw.to_string());
        }
    }
    r.pass = t.bad == 0 && t.total > 0;
    r.detail = t.summary("(d, p) pairs");
}

void calcfac_equivalence(Context& ctx, CheckResult& r) {
    const auto& S4 = ctx.lib().get("S4");
    const auto& chi4 = S4.character("chi4");
    const auto& E63 = ctx.registry().curve("63.A2");
    const S4Field& F = ctx.field();
    std::map<std::string, long> seen;
    Tally t;
    for (auto p : primes_in(5, ctx.config().divisibility_primes)) {
        if (E63.is_bad(p) || F.is_ramified(p)) continue;
        const std::string cls = frobenius_class(F, p).cls;
        if (cls != "3a" && cls != "4a") continue;
        const long a = ap(E63, p);
        const auto closed = calcfac_closed_form(a, p, cls == "3a" ? CalcfacCase::fL3_is_3 : CalcfacCase::fL4_is_4);
        const auto rs = rankin_selberg_elliptic(a, p, S4, chi4, S4.class_index(cls));
        t.add(closed.poly() == rs.poly(), cls + " p=" + std::to_string(p));
        ++seen[cls];
    }
    r.pass = t.bad == 0 && seen["3a"] >= 10 && seen["4a"] >= 10;
    r.detail = t.summary("primes") + " (" + std::to_string(seen["3a"]) + " in 3a, " + std::to_string(seen["4a"]) +
               " in 4a)";
}

void divisibility(Context& ctx, CheckResult& r) {
    const auto& S4 = ctx.lib().get("S4");
    const auto& chi4 = S4.character("chi4");
    const auto& E63 = ctx.registry().curve("63.A2");
    const S4Field& F = ctx.field();
    std::vector<std::uint64_t> primes;
    for (auto p : primes_in(5, ctx.config().divisibility_primes))
        if (!E63.is_bad(p) && !F.is_ramified(p)) primes.push_back(p);
    const auto ok = parallel_map(primes, ctx.config().workers, [&](std::uint64_t p) -> int {
        const long a = ap(E63, p);
        const auto J = rankin_selberg_elliptic(a, p, S4, chi4, S4.class_index(frobenius_class(F, p).cls), "J(C2)");
        return J.genus() == 3 && divides(elliptic_poly(a, p), J.poly()) ? 1 : 0;
    });
    Tally t;
    for (std::size_t k = 0; k < primes.size(); ++k) t.add(ok[k] == 1, "J(C2) p=" + std::to_string(primes[k]));

    const auto& E21 = ctx.registry().curve("21.A1");
    const std::vector<EllipticCurveSpec> tw{quadratic_twist(E21, 5), quadratic_twist(E21, -7),
                                            quadratic_twist(E21, -35)};
    Tally u;
    for (auto p : primes_in(5, 500)) {
        if (E21.is_bad(p) || 35 % p == 0) continue;
        IntPoly prod{1};
        for (const auto& T : tw) prod = prod * local_factor(T, p).poly();
        u.add(divides(local_factor(E21, p).poly(), prod), "twists p=" + std::to_string(p));
    }
    r.pass = t.bad == 0 && u.bad == 0 && t.total > 0 && u.total > 0;
    r.detail = "J(C2): " + t.summary("primes") + "; triple twist (5, -7): " + u.summary("primes");
}

void theta_uniqueness(Context& ctx, CheckResult& r) {
    const auto& S4 = ctx.lib().get("S4");
    const auto& C2 = ctx.lib().get("C2");
    const auto& E21 = ctx.registry().curve("21.A1");
    const auto& E63 = ctx.registry().curve("63.A2");
    const unsigned w = ctx.config().workers;
    const auto right = rankin_selberg_factor(S4, E63, S4.character("chi4"), "J(C2)");
    std::string detail;
    bool pass = true;
    auto report = [&](const std::string& name, const GroupTable& G, const ThetaSolution& S, const Multiplicities& want) {
        std::string got;
        for (const auto& s : S.filter.survivors) got += (got.empty() ? "" : " | ") + to_string(G, s);
        const bool ok = S.unique() && S.filter.survivors.front() == want && S.survivors_without_supersingular == S.filter.survivors;
        pass = pass && ok;
        detail += (detail.empty() ? "" : "; ") + name + " -> " + got + " (" + std::to_string(S.candidate_count) +
                  " candidates)";
        Record rec;
        rec.set("problem", name).set("survivors", got).set("candidates", static_cast<std::int64_t>(S.candidate_count))
            .set("supersingular_records", static_cast<std::int64_t>(S.supersingular_records)).set("pass", ok);
        r.records.push_back(rec);
    };
    auto want = [](const GroupTable& G, const std::string& name, long k) {
        Multiplicities n(G.irreducibles.size(), 0);
        n[G.character_index(name)] = k;
        return n;
    };
    const auto P21 = build_problem(S4, 9, E21, s4_classes(S4, ctx.field()), right, "J(C2)", ctx.config().theta_primes,
                                   {}, w);
    report("theta(E21^3, J(C2))", S4, solve(P21, w), want(S4, "chi5", 3));
    const auto P63 = build_problem(S4, 9, E63, s4_classes(S4, ctx.field()), right, "J(C2)", ctx.config().theta_primes,
                                   {}, w);
    report("theta(E63^3, J(C2))", S4, solve(P63, w), want(S4, "chi4", 3));
    const auto Pq = build_problem(C2, 1, E21, quadratic_classes(C2, 5), product_factor({quadratic_twist(E21, 5)}, "E_5"),
                                  "E_5", ctx.config().theta_primes, {}, w);
    report("theta(E21, E21_5)", C2, solve(Pq, w), want(C2, "chi_q", 1));
    r.pass = pass;
    r.detail = detail;
}

void character_identities(Context& ctx, CheckResult& r) {
    const auto& lib = ctx.lib();
    const auto& S4 = lib.get("S4");
    const auto& G = lib.get("G288");
    Tally t;
    t.add(tensor(G.character("psi7"), G.character("psi9")) == G.character("psi13"), "psi7 psi9 != psi13");
    t.add(inflate(lib, G, "pi_L", S4.character("chi5")) == G.character("psi9"), "Inf_L chi5 != psi9");
    t.add(inflate(lib, G, "pi_Lp", S4.character("chi5")) == G.character("psi7"), "Inf_L' chi5' != psi7");
    const auto sum = [&](std::initializer_list<const char*> names) {
        ClassFunction s = S4.make(std::vector<CycloInt>(S4.classes.size(), CycloInt(0)));
        for (const char* n : names) s += S4.character(n);
        return s;
    };
    t.add(tensor(S4.character("chi4"), S4.character("chi5")) == sum({"chi2", "chi3", "chi4", "chi5"}),
          "chi4 chi5 != chi2+chi3+chi4+chi5");
    t.add(tensor(S4.character("chi5"), S4.character("chi5")) == sum({"chi1", "chi3", "chi4", "chi5"}),
          "chi5^2 != chi1+chi3+chi4+chi5");
    r.pass = t.bad == 0;
    r.detail = t.summary("identities");
}

void theta_table(Context& ctx, CheckResult& r) {
    ThetaTableInputs in;
    in.lib = &ctx.lib();
    in.registry = &ctx.registry();
    in.field = &ctx.field();
    in.field2 = &ctx.field2();
    in.max_p = ctx.config().theta_primes;
    in.workers = ctx.config().workers;
    const auto items = verify_theta_table(in);
    Tally t;
    std::string got;
    for (const auto& it : items) {
        t.add(it.pass, it.id + ": expected " + it.expected + ", got " + it.got);
        got += (got.empty() ? "" : ", ") + it.id + " = " + it.got;
        Record rec;
        rec.set("item", it.id).set("group", it.group).set("expected", it.expected).set("got", it.got)
            .set("detail", it.detail).set("pass", it.pass);
        r.records.push_back(rec);
    }
    r.pass = t.bad == 0 && items.size() == 6;
    r.detail = t.bad ? t.summary("items") : got;
}

void moments_closed_form(Context& ctx, CheckResult& r) {
    const auto& S4 = ctx.lib().get("S4");
    const auto& t4 = S4.character("chi4");
    Tally t;
    struct Want {
        int i;
        unsigned n;
        long value;
    };
    for (const Want& w : {Want{1, 1, 0}, Want{1, 2, 1}, Want{1, 4, 8}, Want{2, 1, 1}}) {
        const Rational got = theoretical_moment(S4, t4, w.i, w.n);
        t.add(got == w.value, "M" + std::to_string(w.n) + "(abar" + std::to_string(w.i) + ") = " + to_string(got));
        Record rec;
        rec.set("coefficient", static_cast<std::int64_t>(w.i)).set("order", static_cast<std::int64_t>(w.n))
            .set("value", got).set("pass", got == w.value);
        r.records.push_back(rec);
    }
    r.pass = t.bad == 0;
    r.detail = t.summary("moments");
}

void moments_empirical(Context& ctx, CheckResult& r) {
    const auto& S4 = ctx.lib().get("S4");
    const auto& t4 = S4.character("chi4");
    const auto& samples = ctx.moment_samples();
    std::vector<MomentReport> reps;
    for (auto [i, n] : {std::pair{1, 2u}, {1, 4u}, {1, 1u}, {2, 1u}}) reps.push_back(empirical_moment(S4, t4, i, n, samples));
    for (unsigned n : {1u, 2u})
        reps.push_back(catalan_moment_check(ctx.registry().curve("63.A2"), n, ctx.config().moment_primes,
                                            ctx.config().workers));
    Tally t;
    std::string d;
    for (const auto& m : reps) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "M%u(%s) = %.4f vs %s (tol %.3f)", m.order, m.quantity.c_str(), m.empirical,
                      to_string(m.theoretical).c_str(), m.tolerance);
        t.add(m.pass, buf);
        d += (d.empty() ? "" : ", ") + std::string(buf);
        r.records.push_back(moment_record(m));
    }
    r.pass = t.bad == 0;
    r.detail = std::to_string(samples.size()) + " primes: " + d;
}

void chebotarev(Context& ctx, CheckResult& r) {
    const auto& S4 = ctx.lib().get("S4");
    const auto freq = class_frequencies(ctx.field(), 2, ctx.config().chebotarev_primes);
    long total = 0;
    for (const auto& [k, v] : freq) total += v;
    Tally t;
    std::string d;
    for (const auto& c : S4.classes) {
        const double want = static_cast<double>(c.size) / static_cast<double>(S4.order);
        const auto it = freq.find(c.label);
        const double got = total ? static_cast<double>(it == freq.end() ? 0 : it->second) / total : 0;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s %.2f%% (want %.2f%%)", c.label.c_str(), 100 * got, 100 * want);
        t.add(std::fabs(got - want) <= 0.05, buf);
        d += (d.empty() ? "" : ", ") + std::string(buf);
        Record rec;
        rec.set("class", c.label).set("count", static_cast<std::int64_t>(it == freq.end() ? 0 : it->second))
            .set("frequency", got).set("expected", Rational(c.size, S4.order)).set("pass", std::fabs(got - want) <= 0.05);
        r.records.push_back(rec);
    }
    r.pass = t.bad == 0 && total > 0;
    r.detail = std::to_string(total) + " primes: " + d;
}

void eigenvalue_round_trip(Context& ctx, CheckResult& r) {
    Tally t;
    for (const auto& id : ctx.lib().ids()) {
        const auto& G = ctx.lib().get(id);
        for (const auto& chi : G.irreducibles)
            for (std::size_t c = 0; c < G.classes.size(); ++c) {
                const std::string where = id + " " + chi.name() + " at " + G.classes[c].label;
                try {
                    const auto m = eigenvalue_multiset(G, chi, c);
                    long total = 0;
                    bool nonneg = true;
                    for (long x : m.mult) {
                        total += x;
                        nonneg = nonneg && x >= 0;
                    }
                    t.add(nonneg && BigInt(total) == chi.degree() && m.sum() == chi[c], where);
                } catch (const MalformedTable& e) {
                    t.add(false, where + ": " + e.what());
                }
            }
    }
    r.pass = t.bad == 0 && t.total > 0;
    r.detail = t.summary("(table, character, class) triples");
}

std::vector<CheckDef> make_checks() {
    return {
        {"AC1", "C1 point counts equal 1 + p - 3 a21(p)", 10, c1_identity},
        {"AC2", "twist relation a63 = (-3|p) a21", 0, twist_relation},
        {"AC3", "cubic base-change point count", 5, cubic_base_change},
        {"AC4", "quadratic Rankin-Selberg equals the twisted factor", 0, quadratic_rs},
        {"AC5", "closed forms equal Rankin-Selberg on 3a and 4a", 0, calcfac_equivalence},
        {"AC6", "L_p(E63) divides the J(C2) factor; triple-twist divisibility", 0, divisibility},
        {"AC7", "theta-solver uniqueness", 30, theta_uniqueness},
        {"AC8", "character identities on both tables", 0, character_identities},
        {"AC9", "all six theta traces", 0, theta_table},
        {"AC10", "closed-form moments", 0, moments_closed_form},
        {"AC11", "empirical moments", 180, moments_empirical},
        {"AC12", "Chebotarev frequencies", 0, chebotarev},
        {"AC13", "eigenvalue round trip", 0, eigenvalue_round_trip},
    };
}

}  // namespace

const std::vector<CheckDef>& acceptance_checks() {
    static const std::vector<CheckDef> all = make_checks();
    return all;
}

const CheckDef& acceptance_check(const std::string& id) {
    for (const auto& d : acceptance_checks())
        if (d.id == id) return d;
    throw ConfigError("unknown check \"" + id + "\"");
}

CheckResult run_check(Context& ctx, const CheckDef& def) {
    CheckResult r;
    r.id = def.id;
    r.title = def.title;
    r.reproducer = reproducer(ctx.config(), def.id);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        def.run(ctx, r);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        r.pass = false;
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (def.time_limit > 0 && r.seconds > def.time_limit) {
        r.pass = false;
        char buf[96];
        std::snprintf(buf, sizeof buf, "; took %.1f s, limit %.0f s", r.seconds, def.time_limit);
        r.detail += buf;
    }
    return r;
}

std::string reproducer(const RunConfig& cfg, const std::string& id) {
    const RunConfig def = default_config();
    std::string s = "artin verify-paper --only " + id;
    auto path = [](const std::filesystem::path& p) { return std::filesystem::absolute(p).lexically_normal().string(); };
    if (path(cfg.registry) != path(def.registry)) s += " --registry " + path(cfg.registry);
    if (path(cfg.groups) != path(def.groups)) s += " --groups " + path(cfg.groups);
    auto bound = [&](const char* flag, std::uint64_t v, std::uint64_t d) {
        if (v != d) s += std::string(" ") + flag + " " + std::to_string(v);
    };
    bound("--theta-primes", cfg.theta_primes, def.theta_primes);
    bound("--divisibility-primes", cfg.divisibility_primes, def.divisibility_primes);
    bound("--chebotarev-primes", cfg.chebotarev_primes, def.chebotarev_primes);
    bound("--moment-primes", cfg.moment_primes, def.moment_primes);
    if (cfg.search_height != def.search_height) s += " --height " + std::to_string(cfg.search_height);
    auto coeffs = [](const std::array<long, 4>& q) {
        return std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
               std::to_string(q[3]);
    };
    if (cfg.quartic) s += " --quartic " + coeffs(*cfg.quartic);
    if (cfg.quartic2) s += " --quartic2 " + coeffs(*cfg.quartic2);
    if (!cfg.include_supersingular) s += " --exclude-supersingular";
    if (cfg.strict_table2) s += " --strict-table2";
    return s;
}

std::string summary_line(const CheckResult& r) {
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", r.seconds);
    const char* verdict = r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL";
    return std::string(verdict) + " " + r.id + " [" + t + "] " + r.title + ": " + r.detail;
}

namespace {

void write_outputs(const RunConfig& cfg, const std::vector<CheckResult>& results) {
    if (cfg.out_dir.empty()) return;
    std::vector<Record> rows;
    for (const auto& r : results) {
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["title"] = r.title;
        j["status"] = r.skipped ? "skipped" : r.pass ? "pass" : "fail";
        j["detail"] = r.detail;
        if (!r.pass) j["reproducer"] = r.reproducer;
        if (!r.records.empty()) {
            std::vector<std::string> cols;
            for (const auto& [k, v] : r.records.front().fields) cols.push_back(k);
            j["records"] = to_json(cols, r.records);
        }
        write_text(cfg.out_dir / "checks" / (r.id + ".json"), j.dump(2) + "\n");
        Record row;
        row.set("id", r.id).set("status", std::string(r.skipped ? "skipped" : r.pass ? "pass" : "fail"))
            .set("title", r.title).set("detail", r.detail).set("reproducer", r.pass ? std::string() : r.reproducer);
        rows.push_back(row);
    }
    emit_report(cfg.out_dir, "summary", {"id", "status", "title", "detail", "reproducer"}, rows);
}

}  // namespace

VerifyOutcome verify_paper(const RunConfig& cfg, const std::vector<std::string>& only, std::ostream* log) {
    for (const auto& id : only) acceptance_check(id);
    Context ctx(cfg);
    std::vector<const CheckDef*> plan{&acceptance_check(kTwistGate)};
    for (const auto& d : acceptance_checks()) {
        if (d.id == kTwistGate) continue;
        if (!only.empty() && std::find(only.begin(), only.end(), d.id) == only.end()) continue;
        plan.push_back(&d);
    }
    VerifyOutcome out;
    bool gate_failed = false;
    for (const CheckDef* d : plan) {
        CheckResult r;
        if (gate_failed) {
            r.id = d->id;
            r.title = d->title;
            r.skipped = true;
            r.detail = "skipped: twist gate failed";
            r.reproducer = reproducer(cfg, d->id);
        } else {
            r = run_check(ctx, *d);
            if (d->id == kTwistGate && !r.pass) gate_failed = true;
        }
        if (log) *log << summary_line(r) << (r.pass || r.skipped ? "" : "\n  reproduce: " + r.reproducer) << std::endl;
        out.results.push_back(std::move(r));
    }
    for (const auto& r : out.results)
        if (!r.pass) out.exit_code = 1;
    write_outputs(cfg, out.results);
    return out;
}

}  // namespace artin
