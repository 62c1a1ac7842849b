#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace zx {

/// An exact angle: a rational multiple of pi plus an integer combination of
/// named formal symbols, kept normalized modulo 2*pi.
///
/// The rational part num/den means alpha = pi * num/den with den >= 1,
/// gcd(|num|, den) = 1 and 0 <= num/den < 2. Symbol coefficients are
/// integers; zero coefficients are dropped. A phase with no symbols is
/// "concrete" and can be turned into radians.
class Phase {
public:
    Phase() = default;
    Phase(std::int64_t num, std::int64_t den);
    explicit Phase(std::int64_t num): Phase(num, 1) {}

    static Phase zero() { return Phase(); }
    static Phase pi() { return Phase(1, 1); }
    /// A single formal symbol with coefficient one.
    static Phase symbol(const std::string& name, std::int32_t coeff = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    const std::map<std::string, std::int32_t>& symbols() const { return symbols_; }

    bool is_zero() const { return num_ == 0 && symbols_.empty(); }
    bool is_pi() const { return num_ == 1 && den_ == 1 && symbols_.empty(); }
    bool is_concrete() const { return symbols_.empty(); }

    Phase operator+(const Phase& other) const;
    Phase operator-() const;
    Phase operator-(const Phase& other) const { return *this + (-other); }
    Phase& operator+=(const Phase& other) { return *this = *this + other; }

    bool operator==(const Phase& other) const = default;
    auto operator<=>(const Phase& other) const = default;

    /// Radians in [0, 2*pi). Throws SymbolicScalarError on symbolic phases.
    double to_radians() const;

    /// Text form in units of pi: "num/den" with optional "+sym"/"-sym"
    /// suffixes, e.g. "1/2", "0", "1/4+a", "0-2b".
    std::string str() const;
    static Phase parse(const std::string& text);

private:
    void normalize();

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::map<std::string, std::int32_t> symbols_;
};

inline Phase phase_add(const Phase& a, const Phase& b) { return a + b; }
inline Phase phase_negate(const Phase& a) { return -a; }

} // namespace zx
