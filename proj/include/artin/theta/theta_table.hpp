#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artin/chars/group_table.hpp"
#include "artin/curves/registry.hpp"
#include "artin/frobenius/s4_field.hpp"
#include "artin/theta/solver.hpp"

namespace artin {

struct ThetaTableInputs {
    const GroupLibrary* lib = nullptr;
    const Registry* registry = nullptr;
    const S4Field* field = nullptr;   // L
    const S4Field* field2 = nullptr;  // L'
    std::string e21 = "21.A1";
    std::string e63 = "63.A2";
    std::uint64_t max_p = 1000;
    unsigned workers = 0;
};

struct ThetaItem {
    std::string id;     // theta21, theta13, ...
    std::string group;  // table the answer lives on
    std::string expected;
    std::string got;
    bool pass = false;
    std::string detail;
};

/// Solves theta21, theta13, theta10 with the solver, derives theta02 and theta03 from the
/// tensor containments and theta32 by transitivity on G288.
std::vector<ThetaItem> verify_theta_table(const ThetaTableInputs& in);

/// n chi4 + m chi5 is forced for theta02 by: inside theta21 (x) Inf(theta10), and
/// Inf(theta10) inside theta02 (x) theta21. Returns every multiplicity vector of dimension
/// `dim` passing both containments.
std::vector<Multiplicities> containment_candidates(const GroupTable& G, long dim, const ClassFunction& theta21,
                                                   const ClassFunction& inf_theta10);

}  // namespace artin
