#include "artin/harness/report.hpp"

#include <cstdio>
#include <fstream>

#include "artin/error.hpp"

namespace artin {

Record& Record::set(const std::string& name, Value v) {
    for (auto& [k, old] : fields)
        if (k == name) {
            old = std::move(v);
            return *this;
        }
    fields.emplace_back(name, std::move(v));
    return *this;
}

const Value& Record::get(const std::string& name) const {
    for (const auto& [k, v] : fields)
        if (k == name) return v;
    throw NotFound("record has no field \"" + name + "\"");
}

namespace {

std::string fixed(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

const Value* find(const Record& r, const std::string& name) {
    for (const auto& [k, v] : r.fields)
        if (k == name) return &v;
    return nullptr;
}

}  // namespace

std::string format_value(const Value& v) {
    struct Visitor {
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(std::int64_t x) const { return std::to_string(x); }
        std::string operator()(const BigInt& x) const { return x.get_str(); }
        std::string operator()(double x) const { return fixed(x); }
        std::string operator()(const Rational& q) const {
            Rational c = q;
            c.canonicalize();
            return c.get_num().get_str() + "/" + c.get_den().get_str();
        }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    };
    return std::visit(Visitor{}, v);
}

std::string to_csv(const std::vector<std::string>& columns, const std::vector<Record>& rows) {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + csv_escape(columns[i]);
    out += "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out += ",";
            if (const Value* v = find(r, columns[i])) out += csv_escape(format_value(*v));
        }
        out += "\n";
    }
    return out;
}

nlohmann::ordered_json to_json(const std::vector<std::string>& columns, const std::vector<Record>& rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json o = nlohmann::ordered_json::object();
        for (const auto& c : columns) {
            const Value* v = find(r, c);
            if (!v) {
                o[c] = nullptr;
            } else if (const auto* i = std::get_if<std::int64_t>(v)) {
                o[c] = *i;
            } else if (const auto* b = std::get_if<bool>(v)) {
                o[c] = *b;
            } else if (const auto* d = std::get_if<double>(v)) {
                o[c] = *d;
            } else if (const auto* z = std::get_if<BigInt>(v); z && z->fits_slong_p()) {
                o[c] = z->get_si();
            } else {
                o[c] = format_value(*v);
            }
        }
        arr.push_back(std::move(o));
    }
    return arr;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw Error("cannot create " + path.parent_path().string() + ": " + ec.message());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw Error("write to " + path.string() + " failed");
}

void emit_report(const std::filesystem::path& dir, const std::string& stem, const std::vector<std::string>& columns,
                 const std::vector<Record>& rows) {
    write_text(dir / (stem + ".csv"), to_csv(columns, rows));
    write_text(dir / (stem + ".json"), to_json(columns, rows).dump(2) + "\n");
}

const std::vector<std::string>& moment_columns() {
    static const std::vector<std::string> c{"coefficient",  "order",  "theoretical_num", "theoretical_den",
                                            "empirical",    "stderr", "n_primes",        "pass"};
    return c;
}

Record moment_record(const MomentReport& r) {
    Rational q = r.theoretical;
    q.canonicalize();
    Record rec;
    rec.set("coefficient", static_cast<std::int64_t>(r.coefficient))
        .set("order", static_cast<std::int64_t>(r.order))
        .set("theoretical_num", BigInt(q.get_num()))
        .set("theoretical_den", BigInt(q.get_den()))
        .set("empirical", r.empirical)
        .set("stderr", r.stderr_)
        .set("n_primes", static_cast<std::int64_t>(r.n_primes))
        .set("pass", r.pass);
    return rec;
}

}  // namespace artin
