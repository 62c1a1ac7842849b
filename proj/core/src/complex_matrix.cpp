#include "zx/complex_matrix.hpp"

#include "zx/error.hpp"

#include <cmath>

namespace zx {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    if (cols_ != other.rows_) {
        throw DimensionMismatchError("matrix product shape mismatch");
    }
    ComplexMatrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex v = at(i, k);
            if (v == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < other.cols_; ++j) {
                r.at(i, j) += v * other.at(k, j);
            }
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionMismatchError("matrix sum shape mismatch");
    }
    ComplexMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] += other.data_[i];
    }
    return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionMismatchError("matrix difference shape mismatch");
    }
    ComplexMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] -= other.data_[i];
    }
    return r;
}

ComplexMatrix ComplexMatrix::operator*(const Complex& c) const {
    ComplexMatrix r = *this;
    for (auto& v: r.data_) {
        v *= c;
    }
    return r;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            r.at(j, i) = std::conj(at(i, j));
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            r.at(j, i) = at(i, j);
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix r = *this;
    for (auto& v: r.data_) {
        v = std::conj(v);
    }
    return r;
}

ComplexMatrix ComplexMatrix::tensor(const ComplexMatrix& other) const {
    ComplexMatrix r(rows_ * other.rows_, cols_ * other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const Complex v = at(i, j);
            if (v == Complex{}) {
                continue;
            }
            for (std::size_t k = 0; k < other.rows_; ++k) {
                for (std::size_t l = 0; l < other.cols_; ++l) {
                    r.at(i * other.rows_ + k, j * other.cols_ + l) = v * other.at(k, l);
                }
            }
        }
    }
    return r;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v: data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("matrix comparison shape mismatch");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    }
    return m;
}

CompareResult equal_matrices(const ComplexMatrix& a, const ComplexMatrix& b,
                             CompareMode mode, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("matrix comparison shape mismatch");
    }
    CompareResult res;
    if (mode == CompareMode::Exact) {
        res.residual = max_abs_diff(a, b);
        res.equal = res.residual <= tol;
        if (res.equal) {
            res.ratio = Complex{1.0, 0.0};
        }
        return res;
    }
    // witness from the entry of b with maximal modulus
    std::size_t arg = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < b.data().size(); ++i) {
        double m = std::abs(b.data()[i]);
        if (m > best) {
            best = m;
            arg = i;
        }
    }
    if (best == 0.0) {
        // b is zero: equal iff a is zero too (no witness)
        res.residual = a.max_abs();
        res.equal = res.residual <= tol;
        return res;
    }
    Complex c = a.data()[arg] / b.data()[arg];
    if (mode == CompareMode::UpToGlobalPhase) {
        double m = std::abs(c);
        if (std::abs(m - 1.0) > tol) {
            res.equal = false;
            res.residual = std::abs(m - 1.0);
            res.ratio = c;
            return res;
        }
        if (m > 0.0) {
            c /= m;
        }
    }
    res.residual = max_abs_diff(a, b * c);
    res.equal = res.residual <= tol;
    res.ratio = c;
    return res;
}

} // namespace zx
