// artin: command-line front end.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "artin/arith/numtheory.hpp"
#include "artin/error.hpp"
#include "artin/harness/checks.hpp"
#include "artin/lfun/rankin_selberg.hpp"
#include "artin/theta/solver.hpp"

using namespace artin;
using ojson = nlohmann::ordered_json;

namespace {

struct Common {
    std::string registry;
    std::string groups;
    unsigned workers = 0;
    long height = 4;
    std::string quartic;
};

RunConfig make_config(const Common& c) {
    RunConfig cfg = default_config();
    if (!c.registry.empty()) cfg.registry = c.registry;
    if (!c.groups.empty()) cfg.groups = c.groups;
    cfg.workers = c.workers;
    cfg.search_height = c.height;
    if (!c.quartic.empty()) cfg.quartic = parse_quartic_coeffs(c.quartic);
    return cfg;
}

std::vector<std::string> coeff_strings(const IntPoly& f) {
    std::vector<std::string> out;
    for (const auto& x : f.coeffs()) out.push_back(x.get_str());
    return out;
}

ojson factor_json(const LocalFactor& L) {
    ojson j;
    j["label"] = L.label();
    j["p"] = L.prime();
    j["genus"] = L.genus();
    j["coefficients"] = coeff_strings(L.poly());
    j["polynomial"] = L.to_string();
    return j;
}

// (1 - aT + pT^2)(rest) when the elliptic factor divides
std::string factored(const LocalFactor& L, const BigInt& a) {
    const IntPoly e = elliptic_poly(a, L.prime());
    if (L.genus() <= 1 || !divides(e, L.poly())) return L.to_string();
    return "(" + to_string(e) + ")(" + to_string(exact_div(L.poly(), e)) + ")";
}

void print(const ojson& j) { std::cout << j.dump(2) << "\n"; }

void add_common(CLI::App* sub, Common& c, bool with_field) {
    sub->add_option("--registry", c.registry, "curve registry JSON (default: shipped)");
    sub->add_option("--groups", c.groups, "group-table directory (default: shipped)");
    sub->add_option("--workers", c.workers, "worker threads, 0 = all cores");
    if (with_field) {
        sub->add_option("--height", c.height, "coefficient bound for the quartic search");
        sub->add_option("--quartic", c.quartic, "quartic coefficients a,b,c,d instead of searching");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Artin representations of Hom-modules: local factors, characters and checks"};
    app.require_subcommand(1);
    Common common;

    // find-quartic
    auto* fq = app.add_subcommand("find-quartic", "search for an S4 quartic with discriminant -3 times a square");
    long fq_count = 1;
    add_common(fq, common, true);
    fq->add_option("--count", fq_count, "number of fields with distinct resolvent fields")->check(CLI::Range(1, 10));

    // frob-class
    auto* fc = app.add_subcommand("frob-class", "Frobenius class of a prime in the splitting field");
    std::uint64_t fc_prime = 0, fc_upto = 0;
    add_common(fc, common, true);
    fc->add_option("--prime", fc_prime, "single prime");
    fc->add_option("--frequencies", fc_upto, "class counts for primes up to this bound");

    // ap
    auto* apc = app.add_subcommand("ap", "trace of Frobenius");
    std::string curve;
    std::uint64_t prime = 0, upto = 0;
    add_common(apc, common, false);
    apc->add_option("--curve", curve, "registry label")->required();
    apc->add_option("--prime", prime, "prime p >= 5");
    apc->add_option("--to", upto, "all good primes 5 <= p <= bound");

    // local-factor
    auto* lf = app.add_subcommand("local-factor", "local factor 1 - a_p T + p T^2");
    add_common(lf, common, false);
    lf->add_option("--curve", curve, "registry label")->required();
    lf->add_option("--prime", prime, "prime p >= 5")->required();

    // rankin-selberg
    auto* rs = app.add_subcommand("rankin-selberg", "Rankin-Selberg polynomial of a curve against a character");
    std::string group = "S4", chi_name = "chi4", cls;
    std::string closed;
    add_common(rs, common, false);
    rs->add_option("--curve", curve, "registry label")->required();
    rs->add_option("--prime", prime, "prime p >= 5")->required();
    rs->add_option("--group", group, "group table id");
    rs->add_option("--char", chi_name, "character name");
    rs->add_option("--class", cls, "conjugacy class label")->required();
    rs->add_option("--closed-form", closed, "also evaluate the closed form: fL3=3 or fL4=4");

    // res-scalars-check
    auto* rsc = app.add_subcommand("res-scalars-check", "restriction of scalars from a quadratic field");
    long d = 0;
    add_common(rsc, common, false);
    rsc->add_option("--curve", curve, "registry label")->required();
    rsc->add_option("--d", d, "squarefree d != 0, 1")->required();
    rsc->add_option("--prime", prime, "single odd prime");
    rsc->add_option("--to", upto, "all admissible primes up to this bound");

    // theta
    auto* th = app.add_subcommand("theta", "solve for the character of a Hom-module");
    long dim = 0;
    std::string left, right_rs, right_curves;
    std::uint64_t th_primes = 1000;
    std::vector<std::string> hom;
    long quadratic = 0;
    add_common(th, common, true);
    auto* o_group = th->add_option("--group", group, "group table id (default S4, or C2 with --quadratic)");
    th->add_option("--dim", dim, "dimension D")->required();
    th->add_option("--left", left, "elliptic curve label on the left")->required();
    auto* o_rs = th->add_option("--right-rs", right_rs, "LABEL:CHAR, right factor RS(curve, char at class(p))");
    auto* o_rc = th->add_option("--right-curves", right_curves, "LABEL[,LABEL...], right factor by point counting");
    o_rs->excludes(o_rc);
    th->add_option("--primes", th_primes, "constraint prime bound");
    th->add_option("--hom-constraint", hom, "CLASSES:DIM, e.g. trivial:0 or 1a+2a+3a:0");
    th->add_option("--quadratic", quadratic, "classes of Q(sqrt d) instead of the quartic field (group C2)");

    // moments
    auto* mo = app.add_subcommand("moments", "Sato-Tate moments of the normalized J(C2) coefficients");
    int coefficient = 1;
    unsigned order = 2;
    std::uint64_t mo_primes = 100000;
    bool catalan_mode = false, no_ss = false;
    add_common(mo, common, true);
    mo->add_option("--coefficient", coefficient, "1, 2 or 3")->check(CLI::Range(1, 3));
    mo->add_option("--order", order, "moment order");
    mo->add_option("--primes", mo_primes, "prime bound");
    mo->add_flag("--catalan", catalan_mode, "even moment 2n = order of abar(E63) against c_n");
    mo->add_flag("--exclude-supersingular", no_ss, "drop primes with a_p = 0");

    // verify-paper
    auto* vp = app.add_subcommand("verify-paper", "run every acceptance check, twist gate first");
    RunConfig vcfg = default_config();
    std::vector<std::string> only;
    std::string out_dir, quartic2;
    add_common(vp, common, true);
    vp->add_option("--only", only, "restrict to these check ids (AC1 .. AC13)");
    vp->add_option("--out", out_dir, "directory for per-check JSON and the summary");
    vp->add_option("--quartic2", quartic2, "coefficients of the second field");
    vp->add_option("--theta-primes", vcfg.theta_primes, "prime bound for theta constraints")->capture_default_str();
    vp->add_option("--divisibility-primes", vcfg.divisibility_primes, "prime bound for divisibility checks")->capture_default_str();
    vp->add_option("--chebotarev-primes", vcfg.chebotarev_primes, "prime bound for class frequencies")->capture_default_str();
    vp->add_option("--moment-primes", vcfg.moment_primes, "prime bound for empirical moments")->capture_default_str();
    vp->add_flag("--exclude-supersingular", no_ss, "drop primes with a_p = 0 from the moment samples");
    vp->add_flag("--strict-table2", vcfg.strict_table2, "treat the order-288 class sizes as trusted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const RunConfig cfg = make_config(common);
        if (vp->parsed()) {
            RunConfig c = vcfg;
            c.registry = cfg.registry;
            c.groups = cfg.groups;
            c.workers = cfg.workers;
            c.search_height = cfg.search_height;
            c.quartic = cfg.quartic;
            if (!quartic2.empty()) c.quartic2 = parse_quartic_coeffs(quartic2);
            c.out_dir = out_dir;
            c.include_supersingular = !no_ss;
            const auto outcome = verify_paper(c, only, &std::cout);
            long passed = 0;
            for (const auto& r : outcome.results) passed += r.pass;
            std::cout << passed << "/" << outcome.results.size() << " checks passed\n";
            return outcome.exit_code;
        }

        Context ctx(cfg);
        if (fq->parsed()) {
            std::vector<S4Field> found;
            ojson arr = ojson::array();
            for (long k = 0; k < fq_count; ++k) {
                found.push_back(find_s4_quartic(cfg.search_height, found));
                const auto& F = found.back();
                ojson j;
                j["coefficients"] = F.coeff_string();
                j["quartic"] = F.to_string();
                j["discriminant"] = F.discriminant().get_str();
                std::vector<std::string> bad;
                for (const auto& b : F.bad_primes()) bad.push_back(b.get_str());
                j["bad_primes"] = bad;
                j["resolvent"] = to_string(F.resolvent(), "y");
                arr.push_back(j);
            }
            print(fq_count == 1 ? arr[0] : arr);
        } else if (fc->parsed()) {
            const S4Field& F = ctx.field();
            if (fc_upto) {
                ojson j;
                j["quartic"] = F.to_string();
                j["bound"] = fc_upto;
                for (const auto& [k, v] : class_frequencies(F, 2, fc_upto)) j["counts"][k] = v;
                print(j);
            } else {
                if (!fc_prime) throw ConfigError("frob-class needs --prime or --frequencies");
                const auto D = frobenius_class(F, fc_prime);
                ojson j;
                j["quartic"] = F.to_string();
                j["p"] = D.p;
                j["class"] = D.cls;
                j["quartic_pattern"] = D.quartic_pattern;
                j["resolvent_pattern"] = D.cubic_pattern;
                j["f_L4"] = D.f_L4;
                j["f_L3"] = D.f_L3;
                j["f_Q3"] = D.f_Q3;
                print(j);
            }
        } else if (apc->parsed()) {
            const auto& E = ctx.registry().curve(curve);
            if (upto) {
                std::vector<std::uint64_t> ps;
                for (auto p : primes_in(5, upto))
                    if (!E.is_bad(p)) ps.push_back(p);
                const auto a = ap_many(E, ps, cfg.workers);
                ojson j = ojson::object();
                for (std::size_t k = 0; k < ps.size(); ++k) j[std::to_string(ps[k])] = a[k];
                print(j);
            } else {
                if (!prime) throw ConfigError("ap needs --prime or --to");
                ojson j;
                j["label"] = E.label;
                j["p"] = prime;
                j["ap"] = ap(E, prime);
                print(j);
            }
        } else if (lf->parsed()) {
            const auto L = local_factor(ctx.registry().curve(curve), prime);
            ojson j = factor_json(L);
            j["normalized_a1"] = static_cast<double>(L.normalized()[1]);
            print(j);
        } else if (rs->parsed()) {
            const auto& G = ctx.lib().get(group);
            const auto& E = ctx.registry().curve(curve);
            if (E.is_bad(prime)) throw BadReduction(prime, E.label);
            const long a = ap(E, prime);
            const auto L = rankin_selberg_elliptic(a, prime, G, G.character(chi_name), G.class_index(cls),
                                                   "RS(" + curve + ", " + chi_name + ")");
            ojson j = factor_json(L);
            j["class"] = cls;
            j["eigenvalues"] = eigenvalue_multiset(G, G.character(chi_name), G.class_index(cls)).to_string();
            j["factored"] = factored(L, a);
            if (!closed.empty()) {
                const auto C = calcfac_closed_form(a, prime, parse_calcfac_case(closed));
                j["closed_form"] = C.to_string();
                j["closed_form_equal"] = C.poly() == L.poly();
            }
            print(j);
        } else if (rsc->parsed()) {
            const auto& E = ctx.registry().curve(curve);
            const auto& C2 = ctx.lib().get("C2");
            std::vector<std::uint64_t> ps;
            if (upto) {
                for (auto p : primes_in(5, upto))
                    if (!E.is_bad(p) && d % static_cast<long>(p) != 0) ps.push_back(p);
            } else if (prime) {
                ps.push_back(prime);
            } else {
                throw ConfigError("res-scalars-check needs --prime or --to");
            }
            ojson arr = ojson::array();
            bool all = true;
            for (auto p : ps) {
                const auto R = res_scalars_check(E, d, p, C2);
                all = all && R.equal;
                ojson j;
                j["p"] = p;
                j["split"] = R.split;
                j["lhs"] = to_string(R.lhs);
                j["rhs"] = to_string(R.rhs);
                j["equal"] = R.equal;
                arr.push_back(j);
            }
            print(ps.size() == 1 ? arr[0] : arr);
            return all ? 0 : 1;
        } else if (th->parsed()) {
            if (quadratic && o_group->count() == 0) group = "C2";
            const auto& G = ctx.lib().get(group);
            const auto& L = ctx.registry().curve(left);
            std::vector<HomConstraint> hc;
            for (const auto& h : hom) hc.push_back(parse_hom_constraint(h));
            const ClassSource classes =
                quadratic ? quadratic_classes(G, quadratic) : s4_classes(G, ctx.field());
            FactorSource right;
            std::string right_label;
            if (!right_rs.empty()) {
                const auto colon = right_rs.find(':');
                if (colon == std::string::npos) throw ConfigError("--right-rs expects LABEL:CHAR");
                right_label = "RS(" + right_rs + ")";
                right = rankin_selberg_factor(G, ctx.registry().curve(right_rs.substr(0, colon)),
                                              G.character(right_rs.substr(colon + 1)), right_label);
            } else if (!right_curves.empty()) {
                std::vector<EllipticCurveSpec> cs;
                std::stringstream in(right_curves);
                std::string lab;
                while (std::getline(in, lab, ',')) cs.push_back(ctx.registry().curve(lab));
                right_label = right_curves;
                right = product_factor(cs, right_label);
            } else {
                throw ConfigError("theta needs --right-rs or --right-curves");
            }
            const auto P = build_problem(G, dim, L, classes, right, right_label, th_primes, hc, cfg.workers);
            const auto cands = enumerate_candidates(P);
            ojson j;
            j["group"] = G.id;
            j["dim"] = dim;
            j["left"] = left;
            j["right"] = right_label;
            j["constraint_primes"] = P.records.size();
            j["hom_constraints"] = hom;
            j["candidates"] = ojson::array();
            for (const auto& c : cands) j["candidates"].push_back(to_string(G, c));
            int code = 0;
            try {
                const auto S = solve(P, cfg.workers);
                j["eliminated"] = ojson::array();
                for (const auto& e : S.filter.eliminated) {
                    ojson x;
                    x["candidate"] = to_string(G, e.candidate);
                    x["prime"] = e.prime ? ojson(*e.prime) : ojson(nullptr);
                    x["reason"] = e.reason;
                    j["eliminated"].push_back(x);
                }
                j["survivors"] = ojson::array();
                for (const auto& s : S.filter.survivors) {
                    const auto chi = to_character(G, s);
                    ojson x;
                    x["character"] = to_string(G, s);
                    x["kernel"] = kernel_classes(G, chi);
                    x["faithful"] = is_faithful(G, chi);
                    j["survivors"].push_back(x);
                }
                j["supersingular_records"] = S.supersingular_records;
                j["unique_without_supersingular"] =
                    S.unique() && S.survivors_without_supersingular == S.filter.survivors;
                code = S.unique() ? 0 : 1;
            } catch (const InconsistentData& e) {
                j["survivors"] = ojson::array();
                j["error"] = e.what();
                code = 1;
            }
            print(j);
            return code;
        } else if (mo->parsed()) {
            const auto& S4 = ctx.lib().get("S4");
            MomentReport r;
            if (catalan_mode) {
                if (order % 2) throw ConfigError("--catalan needs an even --order");
                r = catalan_moment_check(ctx.registry().curve("63.A2"), order / 2, mo_primes, cfg.workers);
            } else {
                const auto samples = collect_samples(ctx.registry().curve("63.A2"), ctx.field(), S4,
                                                     S4.character("chi4"), {mo_primes, !no_ss, cfg.workers});
                r = empirical_moment(S4, S4.character("chi4"), coefficient, order, samples);
            }
            std::cout << to_csv(moment_columns(), {moment_record(r)});
            return r.pass ? 0 : 1;
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const NotFound& e) {
        std::cerr << "not found: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
