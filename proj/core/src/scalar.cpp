#include "zx/scalar.hpp"

#include "zx/error.hpp"

#include <algorithm>
#include <cmath>

namespace zx {

Scalar Scalar::zero() {
    Scalar s;
    s.zero_ = true;
    return s;
}

Scalar Scalar::sqrt2_pow(std::int64_t k) {
    Scalar s;
    s.pow2_ = k;
    return s;
}

Scalar Scalar::from_phase(const Phase& p) {
    Scalar s;
    s.phase_ = p;
    return s;
}

Scalar Scalar::one_plus_exp(const Phase& p) {
    Scalar s;
    s.terms_.push_back(p);
    s.normalize();
    return s;
}

bool Scalar::is_concrete() const {
    if (!phase_.is_concrete()) {
        return false;
    }
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Phase& t) { return t.is_concrete(); });
}

void Scalar::normalize() {
    if (zero_) {
        pow2_ = 0;
        phase_ = Phase();
        terms_.clear();
        return;
    }
    std::vector<Phase> kept;
    kept.reserve(terms_.size());
    for (const Phase& t: terms_) {
        if (t.is_pi()) {
            // 1 + e^{i pi} = 0
            zero_ = true;
            pow2_ = 0;
            phase_ = Phase();
            terms_.clear();
            return;
        }
        if (t.is_zero()) {
            pow2_ += 2; // 1 + e^{i 0} = 2
        } else {
            kept.push_back(t);
        }
    }
    std::sort(kept.begin(), kept.end());
    terms_ = std::move(kept);
}

Scalar Scalar::operator*(const Scalar& other) const {
    if (zero_ || other.zero_) {
        return zero();
    }
    Scalar r;
    r.pow2_ = pow2_ + other.pow2_;
    r.phase_ = phase_ + other.phase_;
    r.terms_ = terms_;
    r.terms_.insert(r.terms_.end(), other.terms_.begin(), other.terms_.end());
    r.normalize();
    return r;
}

Scalar Scalar::conj() const {
    if (zero_) {
        return zero();
    }
    Scalar r;
    r.pow2_ = pow2_;
    r.phase_ = -phase_;
    r.terms_.reserve(terms_.size());
    for (const Phase& t: terms_) {
        r.terms_.push_back(-t);
    }
    r.normalize();
    return r;
}

std::complex<double> Scalar::to_complex() const {
    if (zero_) {
        return {0.0, 0.0};
    }
    if (!is_concrete()) {
        throw SymbolicScalarError("scalar " + str() + " is symbolic");
    }
    std::complex<double> v = std::pow(2.0, static_cast<double>(pow2_) / 2.0);
    v *= std::exp(std::complex<double>(0.0, phase_.to_radians()));
    for (const Phase& t: terms_) {
        v *= 1.0 + std::exp(std::complex<double>(0.0, t.to_radians()));
    }
    return v;
}

std::string Scalar::str() const {
    if (zero_) {
        return "0";
    }
    std::string out = "2^(" + std::to_string(pow2_) + "/2)";
    if (!phase_.is_zero()) {
        out += " exp(i pi " + phase_.str() + ")";
    }
    for (const Phase& t: terms_) {
        out += " (1+exp(i pi " + t.str() + "))";
    }
    return out;
}

} // namespace zx
