#include "artin/chars/class_function.hpp"

#include "artin/error.hpp"

namespace artin {

BigInt ClassFunction::degree() const {
    if (v_.empty()) throw PreconditionError("empty class function");
    auto d = v_[0].to_integer();
    if (!d) throw MalformedTable(name_ + ": value at the identity is not an integer");
    return *d;
}

bool ClassFunction::is_rational() const {
    for (const auto& x : v_)
        if (!x.is_rational_integer()) return false;
    return true;
}

void ClassFunction::require_same(const ClassFunction& o, const char* what) const {
    if (group_ != o.group_ || v_.size() != o.v_.size()) {
        throw PreconditionError(std::string(what) + ": class functions on different groups (" + group_ + ", " + o.group_ + ")");
    }
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    require_same(o, "sum");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    require_same(o, "difference");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}

ClassFunction operator*(const CycloInt& s, const ClassFunction& a) {
    ClassFunction r = a;
    for (auto& x : r.v_) x = s * x;
    r.name_.clear();
    return r;
}

std::string ClassFunction::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ", ";
        s += v_[i].to_string();
    }
    return s + "]";
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
    if (a.group() != b.group() || a.size() != b.size()) {
        throw PreconditionError("tensor: class functions on different groups (" + a.group() + ", " + b.group() + ")");
    }
    std::vector<CycloInt> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] * b[i];
    return ClassFunction(a.group(), std::move(v));
}

ClassFunction dual(const ClassFunction& a) {
    std::vector<CycloInt> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i].conj();
    return ClassFunction(a.group(), std::move(v), a.name().empty() ? "" : "dual(" + a.name() + ")");
}

}  // namespace artin
