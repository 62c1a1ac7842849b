#pragma once

#include "zx/phase.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace zx {

/// A tracked global factor of the closed form
///
///     0   or   2^(pow2/2) * e^(i*phase) * prod_j (1 + e^(i*t_j))
///
/// which is the shape every rewrite rule emits. Normalization keeps the
/// representation canonical: a (1+e^(i*pi)) term collapses the whole scalar
/// to zero, and a (1+e^(i*0)) term becomes a factor 2.
class Scalar {
public:
    Scalar() = default;

    static Scalar one() { return Scalar(); }
    static Scalar zero();
    static Scalar sqrt2_pow(std::int64_t k);
    static Scalar from_phase(const Phase& p);
    static Scalar one_plus_exp(const Phase& p);

    bool is_zero() const { return zero_; }
    std::int64_t sqrt2_power() const { return pow2_; }
    const Phase& phase() const { return phase_; }
    const std::vector<Phase>& one_plus_terms() const { return terms_; }

    bool is_one() const {
        return !zero_ && pow2_ == 0 && phase_.is_zero() && terms_.empty();
    }
    bool is_concrete() const;

    Scalar operator*(const Scalar& other) const;
    Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

    /// Complex conjugate (phase and all terms negated).
    Scalar conj() const;

    /// Numeric value; throws SymbolicScalarError when symbols are present.
    std::complex<double> to_complex() const;

    bool operator==(const Scalar& other) const = default;

    std::string str() const;

private:
    void normalize();

    bool zero_ = false;
    std::int64_t pow2_ = 0;
    Phase phase_;
    std::vector<Phase> terms_; // kept sorted
};

inline Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
inline std::complex<double> scalar_to_complex(const Scalar& s) { return s.to_complex(); }

} // namespace zx
