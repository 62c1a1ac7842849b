#include "zx/phase.hpp"

#include "zx/error.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>

namespace zx {

Phase::Phase(std::int64_t num, std::int64_t den): num_(num), den_(den) {
    normalize();
}

Phase Phase::symbol(const std::string& name, std::int32_t coeff) {
    Phase p;
    if (coeff != 0) {
        p.symbols_[name] = coeff;
    }
    return p;
}

void Phase::normalize() {
    if (den_ == 0) {
        throw ZXError("phase denominator must be nonzero");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    // reduce, then wrap into [0, 2) turns of pi
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    std::int64_t two = 2 * den_;
    num_ %= two;
    if (num_ < 0) {
        num_ += two;
    }
    if (num_ == 0) {
        den_ = 1;
    }
}

Phase Phase::operator+(const Phase& other) const {
    Phase r;
    r.num_ = num_ * other.den_ + other.num_ * den_;
    r.den_ = den_ * other.den_;
    r.symbols_ = symbols_;
    for (const auto& [name, coeff]: other.symbols_) {
        auto it = r.symbols_.find(name);
        if (it == r.symbols_.end()) {
            r.symbols_[name] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) {
                r.symbols_.erase(it);
            }
        }
    }
    r.normalize();
    return r;
}

Phase Phase::operator-() const {
    Phase r;
    r.num_ = -num_;
    r.den_ = den_;
    for (const auto& [name, coeff]: symbols_) {
        r.symbols_[name] = -coeff;
    }
    r.normalize();
    return r;
}

double Phase::to_radians() const {
    if (!is_concrete()) {
        throw SymbolicScalarError("phase " + str() + " is symbolic");
    }
    return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Phase::str() const {
    std::string out = std::to_string(num_);
    if (den_ != 1) {
        out += "/" + std::to_string(den_);
    }
    for (const auto& [name, coeff]: symbols_) {
        out += (coeff < 0) ? "-" : "+";
        std::int64_t c = coeff < 0 ? -static_cast<std::int64_t>(coeff) : coeff;
        if (c != 1) {
            out += std::to_string(c);
        }
        out += name;
    }
    return out;
}

Phase Phase::parse(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& why) -> ZXError {
        return ZXError("bad phase '" + text + "': " + why);
    };
    auto read_int = [&]() -> std::int64_t {
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw fail("expected digit");
        }
        std::int64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        return neg ? -v : v;
    };

    if (text.empty()) {
        throw fail("empty");
    }
    std::int64_t num = 0;
    std::int64_t den = 1;
    // the rational part is optional when the string starts with a symbol term
    bool starts_symbolic =
        std::isalpha(static_cast<unsigned char>(text[0])) ||
        ((text[0] == '+' || text[0] == '-') && text.size() > 1 &&
         std::isalpha(static_cast<unsigned char>(text[1])));
    if (!starts_symbolic) {
        num = read_int();
        if (i < text.size() && text[i] == '/') {
            ++i;
            den = read_int();
        }
    }
    Phase p(num, den);
    while (i < text.size()) {
        char sign = text[i];
        if (sign != '+' && sign != '-') {
            throw fail("expected '+' or '-' before symbol");
        }
        ++i;
        std::int64_t coeff = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                coeff = coeff * 10 + (text[i] - '0');
                ++i;
            }
        }
        std::string name;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
            name += text[i];
            ++i;
        }
        if (name.empty()) {
            throw fail("expected symbol name");
        }
        p += Phase::symbol(name, static_cast<std::int32_t>(sign == '-' ? -coeff : coeff));
    }
    return p;
}

} // namespace zx
