#pragma once

#include "zx/diagram.hpp"

#include <utility>
#include <vector>

namespace zx {

/// Graph state on n vertices: one phase-0 Z spider per vertex with a
/// single output leg, an H vertex on every graph edge. Bare form, no
/// scalar prefactor. Throws ValidationError unless the graph is simple.
Diagram graph_state(const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                    std::size_t n);

/// One post-selected teleportation branch: entangled pair preparation
/// composed with the i-th projection (i = 0..3), plus the matching Pauli
/// correction diagram. correction o branch is proportional to the
/// identity for every branch.
struct TeleportBranch {
    Diagram branch;     // 1 input, 1 output
    Diagram correction; // 1 input, 1 output
};

TeleportBranch teleport_branch(std::size_t i);

} // namespace zx
