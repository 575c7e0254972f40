#pragma once

#include <string>
#include <vector>

#include "artin/arith/cyclo.hpp"

namespace artin {

/// One exact value per conjugacy class of a registered group, in the group's class order.
class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(std::string group, std::vector<CycloInt> values, std::string name = "")
        : group_(std::move(group)), v_(std::move(values)), name_(std::move(name)) {}

    const std::string& group() const { return group_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    std::size_t size() const { return v_.size(); }
    const CycloInt& operator[](std::size_t i) const { return v_.at(i); }
    const std::vector<CycloInt>& values() const { return v_; }

    /// Value at the identity class (index 0) as an integer; throws if it is not one.
    BigInt degree() const;
    bool is_rational() const;

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(const CycloInt& s, const ClassFunction& a);
    /// Pointwise values only; names are ignored.
    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.group_ == b.group_ && a.v_ == b.v_;
    }

    std::string to_string() const;

private:
    void require_same(const ClassFunction& o, const char* what) const;
    std::string group_;
    std::vector<CycloInt> v_;
    std::string name_;
};

/// Pointwise product.
ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);
/// Complex conjugate values.
ClassFunction dual(const ClassFunction& a);

}  // namespace artin
