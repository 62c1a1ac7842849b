#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace zx {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Small by design: everything this
/// library evaluates fits in a few thousand entries.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols):
        rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

    ComplexMatrix operator*(const ComplexMatrix& other) const;
    ComplexMatrix operator+(const ComplexMatrix& other) const;
    ComplexMatrix operator-(const ComplexMatrix& other) const;
    ComplexMatrix operator*(const Complex& c) const;
    ComplexMatrix dagger() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    /// Kronecker product, left factor most significant.
    ComplexMatrix tensor(const ComplexMatrix& other) const;

    /// Largest entry modulus.
    double max_abs() const;

    bool operator==(const ComplexMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Entrywise max-norm of a - b. Throws DimensionMismatchError.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

enum class CompareMode { Exact, UpToGlobalScalar, UpToGlobalPhase };

struct CompareResult {
    bool equal = false;
    /// Witness c with a ~ c*b (1 in exact mode when equal).
    std::optional<Complex> ratio;
    double residual = 0.0;
};

/// Compare a against b, exactly or up to a global scalar/phase. The witness
/// c is computed from the entry of b with maximal modulus, so when equal,
/// a = c*b entrywise within tol.
CompareResult equal_matrices(const ComplexMatrix& a, const ComplexMatrix& b,
                             CompareMode mode, double tol = 1e-9);

} // namespace zx
