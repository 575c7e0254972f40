#include "artin/theta/theta_table.hpp"

#include "artin/error.hpp"

namespace artin {

namespace {

Multiplicities upper_bound_of(const GroupTable& G, const ClassFunction& chi) {
    const Decomposition d = decompose(G, chi, DecomposeMode::linear_solve);
    if (!d.is_character) throw InconsistentData("container " + d.to_string(G) + " is not a character");
    Multiplicities n;
    for (const auto& x : d.integral()) n.push_back(x.get_si());
    return n;
}

std::string survivors_string(const GroupTable& G, const std::vector<Multiplicities>& s) {
    std::string out;
    for (const auto& n : s) out += (out.empty() ? "" : " | ") + to_string(G, n);
    return out.empty() ? "none" : out;
}

ThetaItem item_from(const std::string& id, const GroupTable& G, const Multiplicities& expected,
                    const std::vector<Multiplicities>& got, const std::string& detail) {
    ThetaItem it;
    it.id = id;
    it.group = G.id;
    it.expected = to_string(G, expected);
    it.got = survivors_string(G, got);
    it.pass = got.size() == 1 && got.front() == expected;
    it.detail = detail;
    return it;
}

Multiplicities single(const GroupTable& G, const std::vector<std::pair<std::string, long>>& terms) {
    Multiplicities n(G.irreducibles.size(), 0);
    for (const auto& [name, k] : terms) n[G.character_index(name)] = k;
    return n;
}

std::string solve_detail(const ThetaSolution& S) {
    return std::to_string(S.candidate_count) + " candidates, " + std::to_string(S.filter.eliminated.size()) +
           " eliminated, " + std::to_string(S.supersingular_records) + " supersingular records";
}

}  // namespace

std::vector<Multiplicities> containment_candidates(const GroupTable& G, long dim, const ClassFunction& theta21,
                                                   const ClassFunction& inf_theta10) {
    ThetaProblem P;
    P.group = &G;
    P.dim = dim;
    const Multiplicities upper = upper_bound_of(G, tensor(theta21, inf_theta10));
    std::vector<Multiplicities> out;
    for (const auto& n : enumerate_candidates(P, upper))
        if (contained_in(G, inf_theta10, tensor(to_character(G, n), theta21))) out.push_back(n);
    return out;
}

std::vector<ThetaItem> verify_theta_table(const ThetaTableInputs& in) {
    if (!in.lib || !in.registry || !in.field || !in.field2)
        throw PreconditionError("theta table: missing library, registry or fields");
    const GroupTable& S4 = in.lib->get("S4");
    const GroupTable& C2 = in.lib->get("C2");
    const GroupTable& G288 = in.lib->get("G288");
    const auto& E21 = in.registry->curve(in.e21);
    const auto& E63 = in.registry->curve(in.e63);
    const auto& chi4 = S4.character("chi4");
    const std::vector<HomConstraint> no_quadratic{{{}, 0}, {{"1a", "2a", "3a"}, 0}};

    std::vector<ThetaItem> items;

    // theta21 and theta13 from the Rankin-Selberg elimination over L and L'
    auto solve_over = [&](const S4Field& F, const std::string& right) {
        const ThetaProblem P = build_problem(S4, 9, E21, s4_classes(S4, F), rankin_selberg_factor(S4, E63, chi4, right),
                                             right, in.max_p, no_quadratic, in.workers);
        return solve(P, in.workers);
    };
    const Multiplicities three_chi5 = single(S4, {{"chi5", 3}});
    const ThetaSolution s21 = solve_over(*in.field, "J(C2)");
    items.push_back(item_from("theta21", S4, three_chi5, s21.filter.survivors, solve_detail(s21)));
    const ThetaSolution s13 = solve_over(*in.field2, "J(C3)");
    items.push_back(item_from("theta13", S4, three_chi5, s13.filter.survivors, solve_detail(s13)));

    // theta10 over Q(sqrt -3): Hom_Q dimension from Q-isogeny classes
    const long hom_q = hom_dimension_q({E21, E21, E21}, {E21, E21, E63}, in.max_p);
    const ThetaProblem P10 =
        build_problem(C2, 9, E21, quadratic_classes(C2, -3), product_factor({E21, E21, E63}, "J(C0)"), "J(C0)",
                      in.max_p, {HomConstraint{{}, hom_q}}, in.workers);
    const ThetaSolution s10 = solve(P10, in.workers);
    const Multiplicities theta10_expected = single(C2, {{"chi_t", 6}, {"chi_q", 3}});
    items.push_back(item_from("theta10", C2, theta10_expected, s10.filter.survivors,
                              "dim Hom_Q = " + std::to_string(hom_q) + ", " + solve_detail(s10)));

    // theta02 and theta03 from the containments
    const Multiplicities chi4_2chi5 = single(S4, {{"chi4", 1}, {"chi5", 2}});
    ClassFunction theta10 = s10.unique() ? to_character(C2, s10.filter.survivors.front()) : ClassFunction();
    auto containment_item = [&](const std::string& id, const ThetaSolution& s21like) {
        if (!s21like.unique() || !s10.unique())
            return item_from(id, S4, chi4_2chi5, {}, "needs unique theta21/theta13 and theta10");
        const ClassFunction t21 = to_character(S4, s21like.filter.survivors.front());
        const ClassFunction inf10 = inflate(*in.lib, S4, "sign", theta10);
        const auto c = containment_candidates(S4, 9, t21, inf10);
        const auto bound = upper_bound_of(S4, tensor(t21, inf10));
        std::string detail = "container " + to_string(S4, bound);
        if (c.size() == 1)
            detail += ", n = " + std::to_string(c.front()[S4.character_index("chi4")]) +
                      ", m = " + std::to_string(c.front()[S4.character_index("chi5")]);
        return item_from(id, S4, chi4_2chi5, c, detail);
    };
    items.push_back(containment_item("theta02", s21));
    items.push_back(containment_item("theta03", s13));

    // theta32 on Gal(LL'/Q)
    if (s21.unique() && s13.unique()) {
        const ClassFunction a = inflate(*in.lib, G288, "pi_L", to_character(S4, s21.filter.survivors.front()));
        const ClassFunction b = inflate(*in.lib, G288, "pi_Lp", to_character(S4, s13.filter.survivors.front()));
        const ClassFunction prod = tensor(a, b);
        const Multiplicities bound = upper_bound_of(G288, prod);
        ThetaProblem P;
        P.group = &G288;
        P.dim = 9;
        const auto c = enumerate_candidates(P, bound);
        items.push_back(item_from("theta32", G288, single(G288, {{"psi13", 1}}), c,
                                  "container " + to_string(G288, bound)));
    } else {
        items.push_back(item_from("theta32", G288, single(G288, {{"psi13", 1}}), {}, "needs unique theta21, theta13"));
    }
    return items;
}

}  // namespace artin
