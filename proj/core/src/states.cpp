#include "zx/states.hpp"

#include "zx/error.hpp"

#include <set>

namespace zx {

Diagram graph_state(const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                    std::size_t n) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [a, b]: edges) {
        if (a >= n || b >= n || a == b) {
            throw ValidationError("graph edge out of range or a loop");
        }
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
            throw ValidationError("duplicate graph edge");
        }
    }
    Diagram d(0, n);
    std::vector<VertexId> spiders;
    for (std::size_t i = 0; i < n; ++i) {
        VertexId v = d.add_spider(VertexKind::Z, Phase());
        d.add_edge(v, d.outputs()[i]);
        spiders.push_back(v);
    }
    for (auto [a, b]: edges) {
        VertexId h = d.add_h();
        d.add_edge(spiders[a], h);
        d.add_edge(h, spiders[b]);
    }
    return d;
}

TeleportBranch teleport_branch(std::size_t i) {
    if (i > 3) {
        throw ZXError("branch index must be 0..3");
    }
    const bool phase_flip = i == 1 || i == 3; // <00| - <11| projections
    const bool bit_flip = i == 2 || i == 3;   // <01|, <10| projections

    // branch: input -> projection cap, entangled pair -> output
    Diagram branch(1, 1);
    VertexId cap = branch.add_spider(VertexKind::Z, phase_flip ? Phase::pi() : Phase());
    VertexId pair = branch.add_spider(VertexKind::Z, Phase());
    branch.add_edge(branch.inputs()[0], cap);
    if (bit_flip) {
        VertexId x = branch.add_spider(VertexKind::X, Phase::pi());
        branch.add_edge(cap, x);
        branch.add_edge(x, pair);
    } else {
        branch.add_edge(cap, pair);
    }
    branch.add_edge(pair, branch.outputs()[0]);

    // correction: the matching Pauli, X applied before Z
    Diagram correction(1, 1);
    VertexId end = correction.inputs()[0];
    if (bit_flip) {
        VertexId x = correction.add_spider(VertexKind::X, Phase::pi());
        correction.add_edge(end, x);
        end = x;
    }
    if (phase_flip) {
        VertexId z = correction.add_spider(VertexKind::Z, Phase::pi());
        correction.add_edge(end, z);
        end = z;
    }
    correction.add_edge(end, correction.outputs()[0]);
    return {std::move(branch), std::move(correction)};
}

} // namespace zx
