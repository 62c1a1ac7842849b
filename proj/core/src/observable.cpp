#include "zx/observable.hpp"

#include "zx/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace zx {

namespace {

Complex inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    // <a|b> for column vectors
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        s += std::conj(a.at(i, 0)) * b.at(i, 0);
    }
    return s;
}

ComplexMatrix kron_vec(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.tensor(b);
}

} // namespace

ComplexMatrix ObservableStructure::eta() const {
    return delta * epsilon.dagger();
}

ComplexMatrix ObservableStructure::deleting_point() const {
    return epsilon.dagger();
}

ComplexMatrix swap_matrix(std::size_t da, std::size_t db) {
    ComplexMatrix s(da * db, da * db);
    for (std::size_t a = 0; a < da; ++a) {
        for (std::size_t b = 0; b < db; ++b) {
            s.at(b * da + a, a * db + b) = 1.0;
        }
    }
    return s;
}

ObservableStructure obs_from_basis(const std::vector<ComplexMatrix>& vectors) {
    const std::size_t d = vectors.size();
    if (d == 0) {
        throw NotOrthonormalError("empty basis");
    }
    for (const auto& v: vectors) {
        if (v.rows() != d || v.cols() != 1) {
            throw NotOrthonormalError("basis vectors must be d x 1 columns");
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Complex ip = inner(vectors[i], vectors[j]);
            const Complex want = i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(ip - want) > 1e-9) {
                throw NotOrthonormalError("basis is not orthonormal within 1e-9");
            }
        }
    }
    ObservableStructure os;
    os.dim = d;
    os.delta = ComplexMatrix(d * d, d);
    os.epsilon = ComplexMatrix(1, d);
    for (std::size_t i = 0; i < d; ++i) {
        // delta = sum_i (v_i (x) v_i) v_i^dag ; epsilon = sum_i v_i^dag
        ComplexMatrix vv = kron_vec(vectors[i], vectors[i]) * vectors[i].dagger();
        os.delta = os.delta + vv;
        os.epsilon = os.epsilon + vectors[i].dagger();
    }
    os.basis = vectors;
    return os;
}

ObservableStructure obs_fourier(std::size_t dim) {
    if (dim == 0) {
        throw ZXError("dimension must be positive");
    }
    std::vector<ComplexMatrix> basis;
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        ComplexMatrix v(dim, 1);
        for (std::size_t k = 0; k < dim; ++k) {
            const double angle =
                2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(dim);
            v.at(k, 0) = norm * std::exp(Complex(0.0, angle));
        }
        basis.push_back(std::move(v));
    }
    return obs_from_basis(basis);
}

ObservableStructure obs_from_hadamard(const ComplexMatrix& hmat) {
    const std::size_t d = hmat.rows();
    if (d == 0 || hmat.cols() != d) {
        throw NotHadamardError("matrix must be square");
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (std::abs(std::abs(hmat.at(i, j)) - 1.0) > 1e-9) {
                throw NotHadamardError("entries must have unit modulus");
            }
        }
        if (std::abs(hmat.at(0, i) - 1.0) > 1e-9 || std::abs(hmat.at(i, 0) - 1.0) > 1e-9) {
            throw NotHadamardError("matrix must be dephased (first row/column ones)");
        }
    }
    ComplexMatrix gram = hmat.dagger() * hmat;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Complex want = i == j ? Complex(static_cast<double>(d), 0.0) : Complex{};
            if (std::abs(gram.at(i, j) - want) > 1e-6) {
                throw NotHadamardError("columns are not orthogonal");
            }
        }
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<ComplexMatrix> basis;
    for (std::size_t j = 0; j < d; ++j) {
        ComplexMatrix v(d, 1);
        for (std::size_t k = 0; k < d; ++k) {
            v.at(k, 0) = norm * hmat.at(k, j);
        }
        basis.push_back(std::move(v));
    }
    return obs_from_basis(basis);
}

ComplexMatrix hadamard_f4(double x) {
    const Complex u = std::exp(Complex(0.0, x)) * Complex(0.0, 1.0); // i e^{ix}
    ComplexMatrix h(4, 4);
    const Complex one{1.0, 0.0};
    Complex rows[4][4] = {
        {one, one, one, one},
        {one, u, -one, -u},
        {one, -one, one, -one},
        {one, -u, -one, u},
    };
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            h.at(i, j) = rows[i][j];
        }
    }
    return h;
}

ObservableStructure obs_tensor(const ObservableStructure& a, const ObservableStructure& b) {
    ObservableStructure os;
    os.dim = a.dim * b.dim;
    ComplexMatrix mid = ComplexMatrix::identity(a.dim)
                            .tensor(swap_matrix(a.dim, b.dim))
                            .tensor(ComplexMatrix::identity(b.dim));
    os.delta = mid * a.delta.tensor(b.delta);
    os.epsilon = a.epsilon.tensor(b.epsilon);
    if (a.basis && b.basis) {
        std::vector<ComplexMatrix> basis;
        for (const auto& va: *a.basis) {
            for (const auto& vb: *b.basis) {
                basis.push_back(va.tensor(vb));
            }
        }
        os.basis = std::move(basis);
    }
    return os;
}

void CheckReport::merge(const std::string& name, double r, double tol) {
    witnesses.emplace_back(name, r);
    residual = std::max(residual, r);
    pass = residual <= tol;
}

CheckReport check_observable_structure(const ObservableStructure& os, double tol) {
    const std::size_t d = os.dim;
    CheckReport rep;
    rep.check = "observable_structure";
    rep.dim = d;
    rep.pass = true;
    const ComplexMatrix id = ComplexMatrix::identity(d);
    const ComplexMatrix deltadag = os.delta.dagger();
    rep.merge("coassociativity",
              max_abs_diff(os.delta.tensor(id) * os.delta, id.tensor(os.delta) * os.delta), tol);
    rep.merge("cocommutativity", max_abs_diff(swap_matrix(d, d) * os.delta, os.delta), tol);
    rep.merge("counit_left", max_abs_diff(os.epsilon.tensor(id) * os.delta, id), tol);
    rep.merge("counit_right", max_abs_diff(id.tensor(os.epsilon) * os.delta, id), tol);
    rep.merge("speciality", max_abs_diff(deltadag * os.delta, id), tol);
    rep.merge("frobenius",
              max_abs_diff(os.delta * deltadag,
                           deltadag.tensor(id) * id.tensor(os.delta)),
              tol);
    return rep;
}

double classical_residual(const ComplexMatrix& point, const ObservableStructure& os) {
    double r = max_abs_diff(os.delta * point, point.tensor(point));
    ComplexMatrix e = os.epsilon * point;
    r = std::max(r, std::abs(e.at(0, 0) - Complex{1.0, 0.0}));
    r = std::max(r, max_abs_diff(conjugate_point(point, os), point));
    return r;
}

bool is_classical(const ComplexMatrix& point, const ObservableStructure& os, double tol) {
    return classical_residual(point, os) <= tol;
}

double unbiased_residual(const ComplexMatrix& point, const ObservableStructure& os) {
    // normalize, then D (a (.) a_*) must be the deleting point
    double n2 = 0.0;
    for (std::size_t i = 0; i < point.rows(); ++i) {
        n2 += std::norm(point.at(i, 0));
    }
    if (n2 <= 0.0) {
        return 1.0;
    }
    ComplexMatrix a = point * Complex(1.0 / std::sqrt(n2), 0.0);
    ComplexMatrix conv = point_mult(a, conjugate_point(a, os), os);
    return max_abs_diff(conv * Complex(static_cast<double>(os.dim), 0.0),
                        os.deleting_point());
}

bool is_unbiased(const ComplexMatrix& point, const ObservableStructure& os, double tol) {
    return unbiased_residual(point, os) <= tol;
}

ComplexMatrix point_mult(const ComplexMatrix& a, const ComplexMatrix& b,
                         const ObservableStructure& os) {
    return os.delta.dagger() * a.tensor(b);
}

ComplexMatrix lambda_map(const ComplexMatrix& a, const ObservableStructure& os) {
    return os.delta.dagger() * a.tensor(ComplexMatrix::identity(os.dim));
}

ComplexMatrix conjugate_point(const ComplexMatrix& a, const ObservableStructure& os) {
    return ComplexMatrix::identity(os.dim).tensor(a.dagger()) * os.eta();
}

double inner_product_check(const ComplexMatrix& a, const ComplexMatrix& b,
                           const ObservableStructure& os) {
    const Complex lhs = inner(a, b);
    ComplexMatrix rhs = os.epsilon * point_mult(conjugate_point(a, os), b, os);
    return std::abs(lhs - rhs.at(0, 0));
}

std::pair<ComplexMatrix, ComplexMatrix> transpose_conjugate(
    const ComplexMatrix& f, const ObservableStructure& osA, const ObservableStructure& osB) {
    if (f.cols() != osA.dim || f.rows() != osB.dim) {
        throw DimensionMismatchError("f must map A to B");
    }
    const ComplexMatrix ia = ComplexMatrix::identity(osA.dim);
    const ComplexMatrix ib = ComplexMatrix::identity(osB.dim);
    ComplexMatrix transpose = ia.tensor(osB.eta().dagger()) *
                              ia.tensor(f).tensor(ib) *
                              osA.eta().tensor(ib);
    ComplexMatrix conjugate = ib.tensor(osA.eta().dagger()) *
                              ib.tensor(f.dagger()).tensor(ia) *
                              osB.eta().tensor(ia);
    return {transpose, conjugate};
}

StructurePair::StructurePair(ObservableStructure l, ObservableStructure r):
    left(std::move(l)), right(std::move(r)) {
    if (left.dim != right.dim) {
        throw DimensionMismatchError("structure pair on unequal dimensions");
    }
    const ComplexMatrix id = ComplexMatrix::identity(left.dim);
    dualiser = id.tensor(right.eta().dagger()) * left.eta().tensor(id);
}

ComplexMatrix dualiser(const StructurePair& pair) {
    return pair.dualiser;
}

namespace {

std::vector<ComplexMatrix> scaled_basis(const ObservableStructure& os) {
    if (!os.basis) {
        throw MissingBasisError("structure carries no basis");
    }
    std::vector<ComplexMatrix> out;
    const Complex s{std::sqrt(static_cast<double>(os.dim)), 0.0};
    for (const auto& v: *os.basis) {
        out.push_back(v * s);
    }
    return out;
}

} // namespace

CheckReport check_hopf(const StructurePair& pair, bool use_dualiser, double tol) {
    const std::size_t d = pair.left.dim;
    CheckReport rep;
    rep.check = use_dualiser ? "hopf_with_dualiser" : "hopf";
    rep.dim = d;
    rep.pass = true;
    ComplexMatrix mid = use_dualiser
                            ? pair.dualiser.tensor(ComplexMatrix::identity(d))
                            : ComplexMatrix::identity(d * d);
    ComplexMatrix lhs =
        pair.right.delta.dagger() * mid * pair.left.delta * Complex(static_cast<double>(d), 0.0);
    ComplexMatrix rhs = pair.right.deleting_point() * pair.left.epsilon;
    rep.merge("hopf_law", max_abs_diff(lhs, rhs), tol);
    return rep;
}

CheckReport check_complementary(const StructurePair& pair, double tol) {
    CheckReport rep;
    rep.check = "complementary";
    rep.dim = pair.left.dim;
    rep.pass = true;
    if (!pair.left.basis || !pair.right.basis) {
        throw MissingBasisError("complementarity check needs both bases");
    }
    double r1 = 0.0;
    for (const auto& z: *pair.left.basis) {
        r1 = std::max(r1, unbiased_residual(z, pair.right));
    }
    double r2 = 0.0;
    for (const auto& x: *pair.right.basis) {
        r2 = std::max(r2, unbiased_residual(x, pair.left));
    }
    rep.merge("left_classical_unbiased_for_right", r1, tol);
    rep.merge("right_classical_unbiased_for_left", r2, tol);
    return rep;
}

CheckReport check_coherent(const StructurePair& pair, double tol) {
    const std::size_t d = pair.left.dim;
    CheckReport rep;
    rep.check = "coherent";
    rep.dim = d;
    rep.pass = true;
    const Complex sqrtd{std::sqrt(static_cast<double>(d)), 0.0};
    ComplexMatrix ex = pair.right.deleting_point();
    ComplexMatrix ez = pair.left.deleting_point();
    rep.merge("coher1", max_abs_diff(pair.left.delta * ex * sqrtd, ex.tensor(ex)), tol);
    rep.merge("coher2", max_abs_diff(pair.right.delta * ez * sqrtd, ez.tensor(ez)), tol);
    return rep;
}

StructurePair coherify(const StructurePair& pair) {
    if (!pair.left.basis || !pair.right.basis) {
        throw MissingBasisError("coherify needs both bases");
    }
    auto phase_of = [](Complex c) {
        double m = std::abs(c);
        if (m < 1e-12) {
            throw ZeroOverlapError("anchor overlap vanishes");
        }
        return c / m;
    };
    const ComplexMatrix& w0 = pair.right.basis->front();
    std::vector<ComplexMatrix> new_left;
    for (const auto& v: *pair.left.basis) {
        new_left.push_back(v * phase_of(inner(v, w0)));
    }
    const ComplexMatrix& v0 = new_left.front();
    std::vector<ComplexMatrix> new_right;
    for (const auto& w: *pair.right.basis) {
        new_right.push_back(w * phase_of(inner(w, v0)));
    }
    return {obs_from_basis(new_left), obs_from_basis(new_right)};
}

CheckReport check_closed(const StructurePair& pair, double tol) {
    CheckReport rep;
    rep.check = "closed";
    rep.dim = pair.left.dim;
    rep.pass = true;
    auto zs = scaled_basis(pair.left);
    double worst = 0.0;
    for (const auto& z: zs) {
        for (const auto& z2: zs) {
            ComplexMatrix prod = point_mult(z, z2, pair.right);
            double best = 1e300;
            for (const auto& target: zs) {
                best = std::min(best, max_abs_diff(prod, target));
            }
            worst = std::max(worst, best);
        }
    }
    rep.merge("products_stay_classical", worst, tol);
    return rep;
}

CheckReport check_oper_comm(const StructurePair& pair, double tol) {
    CheckReport rep;
    rep.check = "oper_comm";
    rep.dim = pair.left.dim;
    rep.pass = true;
    auto zs = scaled_basis(pair.left);
    auto xs = scaled_basis(pair.right);
    const double sqrtd = std::sqrt(static_cast<double>(pair.left.dim));
    double worst = 0.0;
    for (const auto& z: zs) {
        ComplexMatrix lam_x_z = lambda_map(z, pair.right);
        for (const auto& x: xs) {
            ComplexMatrix lam_z_x = lambda_map(x, pair.left);
            const Complex c = inner(z, x) / sqrtd;
            worst = std::max(worst,
                             max_abs_diff(lam_z_x * lam_x_z, (lam_x_z * lam_z_x) * c));
        }
    }
    rep.merge("operator_commutation", worst, tol);
    return rep;
}

CheckReport check_comul_comm(const StructurePair& pair, double tol) {
    CheckReport rep;
    rep.check = "comul_comm";
    rep.dim = pair.left.dim;
    rep.pass = true;
    auto zs = scaled_basis(pair.left);
    double worst = 0.0;
    for (const auto& z: zs) {
        ComplexMatrix k = lambda_map(z, pair.right);
        worst = std::max(worst,
                         max_abs_diff(pair.left.delta * k, k.tensor(k) * pair.left.delta));
    }
    rep.merge("comultiplicative_commutation", worst, tol);
    return rep;
}

CheckReport check_bialg_comm(const StructurePair& pair, double tol) {
    const std::size_t d = pair.left.dim;
    CheckReport rep;
    rep.check = "bialg_comm";
    rep.dim = d;
    rep.pass = true;
    const ComplexMatrix id = ComplexMatrix::identity(d);
    ComplexMatrix mid = id.tensor(swap_matrix(d, d)).tensor(id);
    ComplexMatrix xdag = pair.right.delta.dagger();
    ComplexMatrix lhs = xdag.tensor(xdag) * mid * pair.left.delta.tensor(pair.left.delta) *
                        Complex(static_cast<double>(d), 0.0);
    ComplexMatrix rhs =
        pair.left.delta * xdag * Complex(std::sqrt(static_cast<double>(d)), 0.0);
    rep.merge("bialgebraic_commutation", max_abs_diff(lhs, rhs), tol);
    return rep;
}

std::vector<ComplexMatrix> unbiased_grid(const ObservableStructure& os, std::size_t limit) {
    if (!os.basis) {
        throw MissingBasisError("unbiased grid needs a basis");
    }
    const std::size_t d = os.dim;
    std::vector<ComplexMatrix> out;
    const std::size_t steps = 16;
    // enumerate theta vectors over the grid, theta_0 = 0, truncating at
    // `limit` points in lexicographic order
    std::vector<std::size_t> idx(d > 0 ? d - 1 : 0, 0);
    for (;;) {
        ComplexMatrix acc = (*os.basis)[0];
        for (std::size_t j = 1; j < d; ++j) {
            const double theta = 2.0 * std::numbers::pi *
                                 static_cast<double>(idx[j - 1]) / static_cast<double>(steps);
            acc = acc + (*os.basis)[j] * std::exp(Complex(0.0, theta));
        }
        out.push_back(acc);
        if (out.size() >= limit) {
            break;
        }
        // increment the mixed-radix counter
        std::size_t j = 0;
        for (; j < idx.size(); ++j) {
            if (++idx[j] < steps) {
                break;
            }
            idx[j] = 0;
        }
        if (j == idx.size()) {
            break;
        }
    }
    return out;
}

CheckReport check_automorphism(const StructurePair& pair, double tol) {
    const std::size_t d = pair.left.dim;
    CheckReport rep;
    rep.check = "automorphism";
    rep.dim = d;
    rep.pass = true;
    auto zs = scaled_basis(pair.left);
    auto grid = unbiased_grid(pair.left, d <= 3 ? 256 : 64);
    const ComplexMatrix id = ComplexMatrix::identity(d);
    double unitary = 0.0;
    double preserves = 0.0;
    double homomorphic = 0.0;
    double fixes_unit = 0.0;
    for (const auto& k: zs) {
        ComplexMatrix K = lambda_map(k, pair.right);
        unitary = std::max(unitary, max_abs_diff(K * K.dagger(), id));
        for (std::size_t i = 0; i < grid.size(); ++i) {
            preserves = std::max(preserves, unbiased_residual(K * grid[i], pair.left));
        }
        const std::size_t pairs = std::min<std::size_t>(grid.size(), 32);
        for (std::size_t i = 0; i < pairs; ++i) {
            const auto& a = grid[i];
            const auto& b = grid[(i * 7 + 3) % grid.size()];
            ComplexMatrix lhs = K * point_mult(a, b, pair.left);
            ComplexMatrix rhs = point_mult(K * a, K * b, pair.left);
            homomorphic = std::max(homomorphic, max_abs_diff(lhs, rhs));
        }
        auto cmp = equal_matrices(K * pair.left.deleting_point(), pair.left.deleting_point(),
                                  CompareMode::UpToGlobalScalar, tol);
        fixes_unit = std::max(fixes_unit, cmp.residual);
    }
    rep.merge("unitary", unitary, tol);
    rep.merge("maps_unbiased_to_unbiased", preserves, tol);
    rep.merge("group_homomorphism", homomorphic, tol);
    rep.merge("fixes_unit_up_to_scalar", fixes_unit, tol);
    return rep;
}

} // namespace zx
