#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace artin {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller violated an operation's documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class BadReduction : public Error {
public:
    explicit BadReduction(std::uint64_t p, const std::string& what_for = "")
        : Error("bad reduction at p = " + std::to_string(p) + (what_for.empty() ? "" : " for " + what_for)),
          prime_(p) {}
    std::uint64_t prime() const noexcept { return prime_; }

private:
    std::uint64_t prime_;
};

class RamifiedPrime : public Error {
public:
    explicit RamifiedPrime(std::uint64_t p)
        : Error("p = " + std::to_string(p) + " divides the discriminant"), prime_(p) {}
    std::uint64_t prime() const noexcept { return prime_; }

private:
    std::uint64_t prime_;
};

/// Character table data that violates a structural invariant.
class MalformedTable : public Error {
public:
    using Error::Error;
};

/// Inputs that cannot all be true at once (corrupted registry, unrealizable class pair, ...).
class InconsistentData : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// An exactness certificate failed inside the library; indicates a bug or corrupted tables.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace artin
