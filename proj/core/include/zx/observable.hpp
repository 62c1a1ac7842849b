#pragma once

#include "zx/complex_matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zx {

/// A copy/delete pair (delta, epsilon) on C^d: delta copies an orthonormal
/// basis, epsilon uniformly deletes it. The basis is kept when the
/// structure was built from one; checkers that quantify over classical
/// points consume it.
struct ObservableStructure {
    std::size_t dim = 0;
    ComplexMatrix delta;   // d^2 x d
    ComplexMatrix epsilon; // 1 x d
    std::optional<std::vector<ComplexMatrix>> basis; // d column vectors

    /// eta = delta . epsilon^dag, the induced cup (d^2 x 1).
    ComplexMatrix eta() const;
    /// epsilon^dag as a column (the deleting point).
    ComplexMatrix deleting_point() const;
};

/// Permutation matrix |a>|b> -> |b>|a> on C^{da} (x) C^{db}.
ComplexMatrix swap_matrix(std::size_t da, std::size_t db);

ObservableStructure obs_from_basis(const std::vector<ComplexMatrix>& vectors);
ObservableStructure obs_fourier(std::size_t dim);
/// Structure from the normalized columns of a dephased complex Hadamard
/// matrix (unit-modulus entries, orthogonal columns, first row and column
/// all ones).
ObservableStructure obs_from_hadamard(const ComplexMatrix& hmat);
/// The family F4(x): a dephased Hadamard on C^4, Fourier at x = 0.
ComplexMatrix hadamard_f4(double x);
ObservableStructure obs_tensor(const ObservableStructure& a, const ObservableStructure& b);

struct CheckReport {
    std::string check;
    std::size_t dim = 0;
    double residual = 0.0;
    bool pass = false;
    std::vector<std::pair<std::string, double>> witnesses;

    void merge(const std::string& name, double r, double tol = 1e-9);
};

CheckReport check_observable_structure(const ObservableStructure& os, double tol = 1e-9);

bool is_classical(const ComplexMatrix& point, const ObservableStructure& os,
                  double tol = 1e-9);
bool is_unbiased(const ComplexMatrix& point, const ObservableStructure& os,
                 double tol = 1e-9);
double classical_residual(const ComplexMatrix& point, const ObservableStructure& os);
double unbiased_residual(const ComplexMatrix& point, const ObservableStructure& os);

/// psi (.) phi = delta^dag (psi (x) phi).
ComplexMatrix point_mult(const ComplexMatrix& a, const ComplexMatrix& b,
                         const ObservableStructure& os);
/// Lambda(psi) = delta^dag (psi (x) 1).
ComplexMatrix lambda_map(const ComplexMatrix& a, const ObservableStructure& os);
/// Conjugate point through the induced cup.
ComplexMatrix conjugate_point(const ComplexMatrix& a, const ObservableStructure& os);

/// | <phi|psi> - epsilon(phi_* (.) psi) |.
double inner_product_check(const ComplexMatrix& a, const ComplexMatrix& b,
                           const ObservableStructure& os);

/// Relative transpose and conjugate of f : A -> B through the cups of the
/// two structures. For basis-built structures the conjugate is entrywise
/// conjugation in those bases.
std::pair<ComplexMatrix, ComplexMatrix> transpose_conjugate(
    const ComplexMatrix& f, const ObservableStructure& osA, const ObservableStructure& osB);

/// Two structures on the same space, with the connecting dualiser cached.
struct StructurePair {
    ObservableStructure left;  // "Z"
    ObservableStructure right; // "X"
    ComplexMatrix dualiser;    // (1 (x) eta_X^dag)(eta_Z (x) 1)

    StructurePair(ObservableStructure l, ObservableStructure r);
};

ComplexMatrix dualiser(const StructurePair& pair);

/// Scaled Hopf law D . delta_X^dag (d_ZX (x) 1) delta_Z = eps_X^dag eps_Z,
/// with the dualiser inserted only when requested.
CheckReport check_hopf(const StructurePair& pair, bool use_dualiser, double tol = 1e-9);
/// Classical points of each structure are unbiased for the other.
CheckReport check_complementary(const StructurePair& pair, double tol = 1e-9);
/// Each deleting point is sqrt(D) times a classical point of the other.
CheckReport check_coherent(const StructurePair& pair, double tol = 1e-9);
/// Re-phase both bases so the pair becomes coherent without changing the
/// underlying observables. Anchored at each structure's first basis
/// vector. Throws ZeroOverlapError when an anchor overlap vanishes.
StructurePair coherify(const StructurePair& pair);

CheckReport check_closed(const StructurePair& pair, double tol = 1e-9);
CheckReport check_oper_comm(const StructurePair& pair, double tol = 1e-9);
CheckReport check_comul_comm(const StructurePair& pair, double tol = 1e-9);
CheckReport check_bialg_comm(const StructurePair& pair, double tol = 1e-9);
/// Left multiplication by classical points of the left structure acting as
/// group automorphisms on the right structure's unbiased points.
CheckReport check_automorphism(const StructurePair& pair, double tol = 1e-9);

/// Grid of unbiased points sum_j e^{i theta_j} v_j (theta_0 = 0, norm
/// sqrt(D)) for a basis-built structure; at most `limit` points, 16 angles
/// per free parameter.
std::vector<ComplexMatrix> unbiased_grid(const ObservableStructure& os,
                                         std::size_t limit = 256);

} // namespace zx
