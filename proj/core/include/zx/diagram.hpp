#pragma once

#include "zx/phase.hpp"
#include "zx/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace zx {

using VertexId = std::uint32_t;

enum class VertexKind { Z, X, H, Boundary };

bool is_spider(VertexKind k);
/// Z <-> X; identity on H and Boundary.
VertexKind flip_color(VertexKind k);

struct Vertex {
    VertexKind kind = VertexKind::Boundary;
    Phase phase; // only meaningful on spiders

    bool operator==(const Vertex&) const = default;
};

/// Open multigraph of Z/X/H/boundary vertices with ordered inputs and
/// outputs and a tracked global scalar. Parallel edges and self-loops are
/// allowed and semantically meaningful.
///
/// Mutation is a builder phase: `validate` checks the invariants (boundary
/// degree 1, H degree 2, endpoints exist, no duplicate boundary entries)
/// and after that a diagram is treated as an immutable value.
class Diagram {
public:
    using Edge = std::pair<VertexId, VertexId>; // normalized a <= b

    Diagram() = default;
    /// n_in + n_out boundary vertices, no internal structure, scalar one.
    Diagram(std::size_t n_in, std::size_t n_out);

    /// n parallel wires input i -> output i.
    static Diagram identity(std::size_t n);

    // --- building -----------------------------------------------------
    VertexId add_vertex(VertexKind kind, Phase phase = Phase());
    VertexId add_spider(VertexKind kind, Phase phase);
    VertexId add_h();
    void add_edge(VertexId a, VertexId b, int multiplicity = 1);
    /// Decrease multiplicity; removes the edge entry at zero.
    void remove_edge(VertexId a, VertexId b, int multiplicity = 1);
    void remove_vertex(VertexId v); // drops incident edges
    void set_phase(VertexId v, Phase p);
    void add_phase(VertexId v, const Phase& p);
    void set_kind(VertexId v, VertexKind kind);
    void multiply_scalar(const Scalar& s);

    // --- access -------------------------------------------------------
    bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
    const Vertex& vertex(VertexId v) const;
    const std::map<VertexId, Vertex>& vertices() const { return vertices_; }
    const std::map<Edge, int>& edges() const { return edges_; }
    int edge_multiplicity(VertexId a, VertexId b) const;
    /// Degree counting multiplicity; a self-loop contributes 2.
    int degree(VertexId v) const;
    /// Distinct neighbors in ascending id order (excludes v itself).
    std::vector<VertexId> neighbors(VertexId v) const;
    int self_loops(VertexId v) const { return edge_multiplicity(v, v); }

    const std::vector<VertexId>& inputs() const { return inputs_; }
    const std::vector<VertexId>& outputs() const { return outputs_; }
    std::vector<VertexId>& mutable_inputs() { return inputs_; }
    std::vector<VertexId>& mutable_outputs() { return outputs_; }

    const Scalar& scalar() const { return scalar_; }
    Scalar& mutable_scalar() { return scalar_; }

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const; // total multiplicity
    std::size_t num_h_vertices() const;
    bool is_concrete() const;

    /// Bumped on every mutation; used to reject stale rewrite matches.
    std::uint64_t revision() const { return revision_; }

    /// Number of connected components among the vertices (scalar-only
    /// diagrams have zero).
    std::size_t connected_components() const;

    // --- structural checks ---------------------------------------------
    std::vector<std::string> validate() const;

private:
    friend Diagram compose_seq(const Diagram& f, const Diagram& g);
    friend Diagram compose_par(const Diagram& f, const Diagram& g);

    void touch() { ++revision_; }

    std::map<VertexId, Vertex> vertices_;
    std::map<Edge, int> edges_;
    std::vector<VertexId> inputs_;
    std::vector<VertexId> outputs_;
    Scalar scalar_;
    VertexId next_id_ = 0;
    std::uint64_t revision_ = 0;
};

/// Sequential composition g after f, read top to bottom: f's outputs are
/// fused pointwise with g's inputs, scalars multiplied, ids reassigned.
/// Throws ArityMismatchError when |f.outputs| != |g.inputs|.
Diagram compose_seq(const Diagram& f, const Diagram& g);

/// Side-by-side juxtaposition, f's wires first.
Diagram compose_par(const Diagram& f, const Diagram& g);

/// Inputs and outputs swapped, spider phases negated, scalar conjugated.
Diagram adjoint(const Diagram& d);

/// Exact structural equality: a vertex bijection preserving kind, phase and
/// edge multiplicities, respecting boundary order, with exactly equal
/// scalars.
bool isomorphic(const Diagram& a, const Diagram& b);
/// Same, ignoring the scalar fields.
bool isomorphic_up_to_scalar(const Diagram& a, const Diagram& b);

} // namespace zx
