#pragma once

#include "zx/complex_matrix.hpp"
#include "zx/diagram.hpp"

namespace zx {

/// The 2x2 Hadamard matrix (1/sqrt2)[[1,1],[1,-1]].
ComplexMatrix hadamard_matrix();

/// Dense matrix of a single spider with n_in inputs and n_out outputs.
/// Z spider: |0..0><0..0| + e^{i a}|1..1><1..1|; X spider: the same
/// conjugated by Hadamards on every leg. Throws SymbolicScalarError for
/// symbolic phases and TooLargeError beyond 14 total legs.
ComplexMatrix spider_matrix(VertexKind kind, std::size_t n_in, std::size_t n_out,
                            const Phase& phase);

struct EvaluateOptions {
    /// Alternative deterministic schedule (ascending edge order) used by
    /// the contraction-order independence checks.
    bool naive_schedule = false;
    /// Cap on amplitudes held in one intermediate tensor.
    std::size_t max_tensor_size = std::size_t{1} << 24;
};

/// Contract a concrete diagram to its matrix, 2^{|outputs|} x 2^{|inputs|},
/// qubit 0 (first boundary) most significant, rows indexing outputs.
/// Requires |inputs|+|outputs| <= 14 and |vertices| <= 64.
ComplexMatrix evaluate(const Diagram& d, const EvaluateOptions& opts = {});

} // namespace zx
