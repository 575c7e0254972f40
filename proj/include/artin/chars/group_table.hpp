#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/arith/bigint.hpp"
#include "artin/chars/class_function.hpp"

namespace artin {

struct ConjugacyClass {
    std::string label;
    long size = 0;
    unsigned order = 1;
    /// power[j] = index of the class of sigma^j, j = 0 .. order-1.
    std::vector<std::size_t> power;
};

/// Class map from this group onto a quotient group.
struct Projection {
    std::string name;
    std::string target;
    std::map<std::string, std::string> map;  // class label -> target class label
};

class GroupTable {
public:
    std::string id;
    long order = 0;
    /// False when the recorded class sizes cannot be used in weighted sums.
    bool sizes_trusted = true;
    std::vector<ConjugacyClass> classes;
    std::vector<ClassFunction> irreducibles;
    std::vector<Projection> projections;

    std::size_t class_index(const std::string& label) const;
    const ConjugacyClass& cls(const std::string& label) const { return classes[class_index(label)]; }
    std::size_t character_index(const std::string& name) const;
    const ClassFunction& character(const std::string& name) const { return irreducibles[character_index(name)]; }
    const Projection& projection(const std::string& name) const;

    /// Index of the class of sigma^j for sigma in class c (any integer j).
    std::size_t power_class(std::size_t c, long j) const;

    /// Class function from explicit values in class order.
    ClassFunction make(std::vector<CycloInt> values, std::string name = "") const;
    ClassFunction trivial() const;
    /// sum n_i chi_i
    ClassFunction combination(const std::vector<BigInt>& n) const;

    /// Structural checks; throws MalformedTable. Size-weighted checks run only when sizes are trusted.
    void validate() const;
};

/// Parses one group table file.
GroupTable parse_group_table(const std::string& text, const std::string& source = "<group>");
GroupTable load_group_table(const std::filesystem::path& path);

/// All tables of a directory, keyed by id, with every projection checked against its target.
class GroupLibrary {
public:
    static GroupLibrary load(const std::filesystem::path& dir);
    void add(GroupTable g);
    /// Throws MalformedTable when a projection is broken; ConfigError when its target is missing.
    void check_projections() const;

    const GroupTable& get(const std::string& id) const;
    bool contains(const std::string& id) const { return tables_.count(id) != 0; }
    std::vector<std::string> ids() const;

private:
    std::map<std::string, GroupTable> tables_;
};

// ---- character calculus

/// Hermitian product (1/|G|) sum size(c) a(c) conj(b(c)); needs trusted sizes.
Rational inner_product(const GroupTable& G, const ClassFunction& a, const ClassFunction& b);

enum class DecomposeMode { orthogonality, linear_solve };

struct Decomposition {
    std::vector<Rational> multiplicity;  // one per irreducible
    /// True when every multiplicity is a nonnegative integer.
    bool is_character = false;

    std::vector<BigInt> integral() const;  // throws unless all are integers
    std::string to_string(const GroupTable& G) const;
};

/// Orthogonality mode needs trusted class sizes. Linear-solve mode solves
/// sum n_i chi_i(c) = chi(c) over Q on cyclotomic coordinates; a rank-deficient
/// system raises MalformedTable.
Decomposition decompose(const GroupTable& G, const ClassFunction& chi, DecomposeMode mode);

/// Multiplicity of zeta_r^k, k = 0..r-1, as an eigenvalue of a representation with
/// character chi at an element of class c (r = element order).
struct EigenvalueMultiset {
    unsigned order = 1;
    std::vector<long> mult;

    /// Exponents k listed with multiplicity.
    std::vector<unsigned> exponents() const;
    CycloInt sum() const;
    std::string to_string() const;
};

/// Throws MalformedTable if some multiplicity is negative or not an integer.
EigenvalueMultiset eigenvalue_multiset(const GroupTable& G, const ClassFunction& chi, std::size_t c);

/// chi on the quotient pulled back along `projection` of G.
ClassFunction inflate(const GroupLibrary& lib, const GroupTable& G, const std::string& projection,
                      const ClassFunction& chi);

/// Classes where chi takes the value chi(1).
std::vector<std::string> kernel_classes(const GroupTable& G, const ClassFunction& chi);
bool is_faithful(const GroupTable& G, const ClassFunction& chi);

}  // namespace artin
