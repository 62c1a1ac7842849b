#pragma once

#include "zx/diagram.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace zx {

/// Gate set: h, rz, rx (phase spiders), cnot, cz, czp (controlled phase)
/// and swap. rz q a is diag(1, e^{i a}); rx is its Hadamard conjugate.
struct Gate {
    enum class Kind { H, RZ, RX, CNOT, CZ, CZPhase, SWAP };
    Kind kind;
    std::size_t q0 = 0;
    std::size_t q1 = 0; // second operand where applicable
    Phase phase;        // rz/rx/czp
};

struct Circuit {
    std::size_t n_qubits = 0;
    std::vector<Gate> gates;
};

/// Text format: header "qubits N", then one gate per line:
///   h q | rz q phase | rx q phase | cnot c t | cz a b | czp a b phase |
///   swap a b
/// Phases in units of pi as "num/den"; '#' starts a comment.
Circuit parse_circuit(const std::string& text);

/// Compile to a diagram with n inputs and n outputs whose evaluation
/// equals the ordered product of the gate matrices exactly (the tracked
/// scalar carries the sqrt(2) per entangling gate).
Diagram compile_circuit(const Circuit& c);

} // namespace zx
