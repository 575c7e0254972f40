#include "artin/curves/registry.hpp"

#include <set>

#include "artin/error.hpp"
#include "artin/util/json_fields.hpp"

namespace artin {

const EllipticCurveSpec& Registry::curve(const std::string& label) const {
    for (const auto& c : curves)
        if (c.label == label) return c;
    throw NotFound("no curve labelled " + label + " in the registry");
}

const PlaneQuarticSpec& Registry::quartic(const std::string& label) const {
    for (const auto& q : quartics)
        if (q.label == label) return q;
    throw NotFound("no quartic labelled " + label + " in the registry");
}

namespace {

EllipticCurveSpec read_curve(const jf::json& j, const std::string& path) {
    EllipticCurveSpec E;
    E.label = jf::to_str(jf::require(j, "label", path), path + ".label");
    const auto& w = jf::require_array(j, "weierstrass", path);
    if (w.size() != 5) throw ConfigError(path + ".weierstrass: expected 5 coefficients [a1,a2,a3,a4,a6]");
    for (std::size_t i = 0; i < 5; ++i) E.a[i] = jf::to_bigint(w[i], path + ".weierstrass[" + std::to_string(i) + "]");
    if (j.contains("conductor")) E.conductor = jf::to_bigint(j["conductor"], path + ".conductor");
    return E;
}

PlaneQuarticSpec read_quartic(const jf::json& j, const std::string& path) {
    PlaneQuarticSpec Q;
    Q.label = jf::to_str(jf::require(j, "label", path), path + ".label");
    const auto& mons = jf::require(j, "monomials", path);
    if (!mons.is_object()) throw ConfigError(path + ".monomials: expected an object");
    for (const auto& [key, val] : mons.items()) {
        const std::string here = path + ".monomials[\"" + key + "\"]";
        if (key.size() != 3 || key.find_first_not_of("01234") != std::string::npos) {
            throw ConfigError(here + ": key must be three exponent digits, e.g. \"400\"");
        }
        const PlaneQuarticSpec::Exponents e{unsigned(key[0] - '0'), unsigned(key[1] - '0'), unsigned(key[2] - '0')};
        Q.monomials[e] = jf::to_bigint(val, here);
    }
    if (j.contains("denominator")) Q.denominator = jf::to_bigint(j["denominator"], path + ".denominator");
    if (j.contains("bad_primes")) {
        const auto& bp = j["bad_primes"];
        if (!bp.is_array()) throw ConfigError(path + ".bad_primes: expected an array");
        for (std::size_t i = 0; i < bp.size(); ++i) {
            const long p = jf::to_long(bp[i], path + ".bad_primes[" + std::to_string(i) + "]");
            if (p < 2) throw ConfigError(path + ".bad_primes[" + std::to_string(i) + "]: not a prime");
            Q.bad_primes.push_back(static_cast<std::uint64_t>(p));
        }
    }
    return Q;
}

Registry from_json(const jf::json& root, const std::string& source) {
    if (!root.is_object()) throw ConfigError(source + ": top level must be an object");
    Registry R;
    std::set<std::string> seen;
    auto claim = [&](const std::string& label, const std::string& path) {
        if (!seen.insert(label).second) throw ConfigError(source + ": " + path + ": duplicate label \"" + label + "\"");
    };

    if (root.contains("curves")) {
        const auto& arr = jf::require_array(root, "curves", source);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = "curves[" + std::to_string(i) + "]";
            EllipticCurveSpec E = read_curve(arr[i], source + ": " + path);
            claim(E.label, path);
            try {
                E.validate();
            } catch (const PreconditionError& e) {
                throw ConfigError(source + ": " + path + ": " + e.what());
            }
            R.curves.push_back(std::move(E));
        }
    }
    if (root.contains("quartics")) {
        const auto& arr = jf::require_array(root, "quartics", source);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = "quartics[" + std::to_string(i) + "]";
            PlaneQuarticSpec Q = read_quartic(arr[i], source + ": " + path);
            claim(Q.label, path);
            try {
                Q.validate();
            } catch (const PreconditionError& e) {
                throw ConfigError(source + ": " + path + ": " + e.what());
            }
            for (auto& w : Q.warnings()) R.warnings.push_back(std::move(w));
            R.quartics.push_back(std::move(Q));
        }
    }
    return R;
}

}  // namespace

Registry parse_registry(const std::string& text, const std::string& source) {
    return from_json(jf::parse(text, source), source);
}

Registry load_registry(const std::filesystem::path& path) { return from_json(jf::parse_file(path), path.string()); }

}  // namespace artin
