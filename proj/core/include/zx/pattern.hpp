#pragma once

#include "zx/diagram.hpp"

#include <map>
#include <string>
#include <vector>

namespace zx {

/// A one-way computation with post-selected measurements: qubits are
/// either inputs or prepared with N, entangled pairwise with E, and every
/// non-output qubit is measured once with M.
struct Pattern {
    struct Measurement {
        std::size_t qubit;
        Phase angle;
    };
    std::vector<std::size_t> inputs;
    std::vector<std::size_t> outputs;
    std::vector<std::size_t> preparations;            // N q
    std::vector<std::pair<std::size_t, std::size_t>> entanglers; // E a b
    std::vector<Measurement> measurements;            // M q angle
};

/// Text format, commands separated by semicolons or newlines:
///   in q | out q | N q | E a b | M q phase
/// Case-insensitive command names; phases in units of pi.
Pattern parse_pattern(const std::string& text);

/// Compile with the post-selection convention: N q prepares the unit point
/// |0>+|1> (a phase-0 Z state), E a b applies cz, and M q a projects onto
/// the copoint <0| + e^{i a} <1| (a phase-a Z effect).
Diagram compile_pattern(const Pattern& p);

} // namespace zx
