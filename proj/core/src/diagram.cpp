#include "zx/diagram.hpp"

#include "zx/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace zx {

bool is_spider(VertexKind k) {
    return k == VertexKind::Z || k == VertexKind::X;
}

VertexKind flip_color(VertexKind k) {
    if (k == VertexKind::Z) {
        return VertexKind::X;
    }
    if (k == VertexKind::X) {
        return VertexKind::Z;
    }
    return k;
}

Diagram::Diagram(std::size_t n_in, std::size_t n_out) {
    for (std::size_t i = 0; i < n_in; ++i) {
        inputs_.push_back(add_vertex(VertexKind::Boundary));
    }
    for (std::size_t i = 0; i < n_out; ++i) {
        outputs_.push_back(add_vertex(VertexKind::Boundary));
    }
}

Diagram Diagram::identity(std::size_t n) {
    Diagram d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        d.add_edge(d.inputs_[i], d.outputs_[i]);
    }
    return d;
}

VertexId Diagram::add_vertex(VertexKind kind, Phase phase) {
    VertexId id = next_id_++;
    vertices_[id] = Vertex{kind, kind == VertexKind::Z || kind == VertexKind::X ? phase : Phase()};
    touch();
    return id;
}

VertexId Diagram::add_spider(VertexKind kind, Phase phase) {
    if (!is_spider(kind)) {
        throw ZXError("add_spider requires Z or X");
    }
    return add_vertex(kind, phase);
}

VertexId Diagram::add_h() {
    return add_vertex(VertexKind::H);
}

void Diagram::add_edge(VertexId a, VertexId b, int multiplicity) {
    if (!has_vertex(a) || !has_vertex(b)) {
        throw UnknownVertexError("edge endpoint does not exist");
    }
    if (multiplicity <= 0) {
        throw ZXError("edge multiplicity must be positive");
    }
    Edge e{std::min(a, b), std::max(a, b)};
    edges_[e] += multiplicity;
    touch();
}

void Diagram::remove_edge(VertexId a, VertexId b, int multiplicity) {
    Edge e{std::min(a, b), std::max(a, b)};
    auto it = edges_.find(e);
    if (it == edges_.end() || it->second < multiplicity) {
        throw ZXError("removing more edge multiplicity than present");
    }
    it->second -= multiplicity;
    if (it->second == 0) {
        edges_.erase(it);
    }
    touch();
}

void Diagram::remove_vertex(VertexId v) {
    if (!has_vertex(v)) {
        throw UnknownVertexError("removing unknown vertex");
    }
    for (auto it = edges_.begin(); it != edges_.end();) {
        if (it->first.first == v || it->first.second == v) {
            it = edges_.erase(it);
        } else {
            ++it;
        }
    }
    vertices_.erase(v);
    std::erase(inputs_, v);
    std::erase(outputs_, v);
    touch();
}

void Diagram::set_phase(VertexId v, Phase p) {
    if (!has_vertex(v)) {
        throw UnknownVertexError("unknown vertex");
    }
    vertices_[v].phase = std::move(p);
    touch();
}

void Diagram::add_phase(VertexId v, const Phase& p) {
    if (!has_vertex(v)) {
        throw UnknownVertexError("unknown vertex");
    }
    vertices_[v].phase += p;
    touch();
}

void Diagram::set_kind(VertexId v, VertexKind kind) {
    if (!has_vertex(v)) {
        throw UnknownVertexError("unknown vertex");
    }
    vertices_[v].kind = kind;
    touch();
}

void Diagram::multiply_scalar(const Scalar& s) {
    scalar_ *= s;
    touch();
}

const Vertex& Diagram::vertex(VertexId v) const {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) {
        throw UnknownVertexError("unknown vertex " + std::to_string(v));
    }
    return it->second;
}

int Diagram::edge_multiplicity(VertexId a, VertexId b) const {
    Edge e{std::min(a, b), std::max(a, b)};
    auto it = edges_.find(e);
    return it == edges_.end() ? 0 : it->second;
}

int Diagram::degree(VertexId v) const {
    int d = 0;
    for (const auto& [e, mult]: edges_) {
        if (e.first == v) {
            d += mult;
        }
        if (e.second == v) {
            d += mult;
        }
    }
    return d;
}

std::vector<VertexId> Diagram::neighbors(VertexId v) const {
    std::set<VertexId> out;
    for (const auto& [e, mult]: edges_) {
        if (e.first == v && e.second != v) {
            out.insert(e.second);
        } else if (e.second == v && e.first != v) {
            out.insert(e.first);
        }
    }
    return {out.begin(), out.end()};
}

std::size_t Diagram::num_edges() const {
    std::size_t n = 0;
    for (const auto& [e, mult]: edges_) {
        n += static_cast<std::size_t>(mult);
    }
    return n;
}

std::size_t Diagram::num_h_vertices() const {
    std::size_t n = 0;
    for (const auto& [id, v]: vertices_) {
        if (v.kind == VertexKind::H) {
            ++n;
        }
    }
    return n;
}

bool Diagram::is_concrete() const {
    if (!scalar_.is_concrete()) {
        return false;
    }
    return std::all_of(vertices_.begin(), vertices_.end(), [](const auto& kv) {
        return kv.second.phase.is_concrete();
    });
}

std::size_t Diagram::connected_components() const {
    std::map<VertexId, VertexId> parent;
    std::function<VertexId(VertexId)> find = [&](VertexId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& [id, v]: vertices_) {
        parent[id] = id;
    }
    for (const auto& [e, mult]: edges_) {
        VertexId ra = find(e.first);
        VertexId rb = find(e.second);
        if (ra != rb) {
            parent[ra] = rb;
        }
    }
    std::set<VertexId> roots;
    for (const auto& [id, v]: vertices_) {
        roots.insert(find(id));
    }
    return roots.size();
}

std::vector<std::string> Diagram::validate() const {
    std::vector<std::string> violations;
    for (const auto& [e, mult]: edges_) {
        if (!has_vertex(e.first) || !has_vertex(e.second)) {
            violations.push_back("edge endpoint missing");
        }
        if (mult <= 0) {
            violations.push_back("non-positive edge multiplicity");
        }
    }
    std::set<VertexId> boundary_seen;
    auto check_boundary_list = [&](const std::vector<VertexId>& list, const char* name) {
        for (VertexId v: list) {
            if (!has_vertex(v)) {
                violations.push_back(std::string(name) + " vertex missing");
                continue;
            }
            if (vertex(v).kind != VertexKind::Boundary) {
                violations.push_back(std::string(name) + " vertex " + std::to_string(v) +
                                     " is not a boundary");
            }
            if (!boundary_seen.insert(v).second) {
                violations.push_back("boundary vertex " + std::to_string(v) +
                                     " listed more than once");
            }
        }
    };
    check_boundary_list(inputs_, "input");
    check_boundary_list(outputs_, "output");
    for (const auto& [id, v]: vertices_) {
        if (v.kind == VertexKind::Boundary) {
            if (boundary_seen.count(id) == 0) {
                violations.push_back("boundary vertex " + std::to_string(id) +
                                     " appears in neither inputs nor outputs");
            }
            if (degree(id) != 1) {
                violations.push_back("boundary vertex " + std::to_string(id) +
                                     " has degree " + std::to_string(degree(id)));
            }
        } else if (v.kind == VertexKind::H) {
            if (degree(id) != 2) {
                violations.push_back("H vertex " + std::to_string(id) + " has degree " +
                                     std::to_string(degree(id)));
            }
            if (!v.phase.is_zero()) {
                violations.push_back("H vertex " + std::to_string(id) + " carries a phase");
            }
        }
    }
    return violations;
}

namespace {

/// Copy src into dst, returning the id translation map.
std::map<VertexId, VertexId> absorb(Diagram& dst, const Diagram& src) {
    std::map<VertexId, VertexId> to;
    for (const auto& [id, v]: src.vertices()) {
        to[id] = dst.add_vertex(v.kind, v.phase);
    }
    for (const auto& [e, mult]: src.edges()) {
        dst.add_edge(to.at(e.first), to.at(e.second), mult);
    }
    dst.multiply_scalar(src.scalar());
    return to;
}

/// Remove junction vertices (fused boundary pairs) by wiring their two
/// edge ends together. A junction that ends up as its own neighbor is a
/// closed loop worth a factor of two.
void resolve_junctions(Diagram& d, std::vector<VertexId> junctions) {
    for (VertexId j: junctions) {
        if (!d.has_vertex(j)) {
            continue;
        }
        if (d.self_loops(j) == 1 && d.degree(j) == 2) {
            d.multiply_scalar(Scalar::sqrt2_pow(2));
            d.remove_vertex(j);
            continue;
        }
        // collect the two edge ends
        std::vector<VertexId> ends;
        for (const auto& [e, mult]: d.edges()) {
            for (int m = 0; m < mult; ++m) {
                if (e.first == j) {
                    ends.push_back(e.second);
                }
                if (e.second == j) {
                    ends.push_back(e.first);
                }
            }
        }
        if (ends.size() != 2) {
            throw ZXError("composition produced a junction of degree " +
                          std::to_string(ends.size()));
        }
        d.remove_vertex(j);
        d.add_edge(ends[0], ends[1]);
    }
}

} // namespace

Diagram compose_seq(const Diagram& f, const Diagram& g) {
    if (f.outputs().size() != g.inputs().size()) {
        throw ArityMismatchError("compose_seq: " + std::to_string(f.outputs().size()) +
                                 " outputs vs " + std::to_string(g.inputs().size()) +
                                 " inputs");
    }
    Diagram r;
    auto fmap = absorb(r, f);
    auto gmap = absorb(r, g);
    for (VertexId v: f.inputs()) {
        r.inputs_.push_back(fmap.at(v));
    }
    for (VertexId v: g.outputs()) {
        r.outputs_.push_back(gmap.at(v));
    }
    // fuse f's outputs with g's inputs pairwise: junction = two boundary
    // vertices melted into one passive connector, then removed
    std::vector<VertexId> junctions;
    for (std::size_t i = 0; i < f.outputs().size(); ++i) {
        VertexId a = fmap.at(f.outputs()[i]);
        VertexId b = gmap.at(g.inputs()[i]);
        // reconnect b's single edge to a, then drop b
        std::vector<std::pair<VertexId, int>> moved;
        for (const auto& [e, mult]: r.edges()) {
            if (e.first == b || e.second == b) {
                VertexId other = e.first == b ? e.second : e.first;
                if (e.first == b && e.second == b) {
                    other = a; // loop between the fused pair
                }
                moved.emplace_back(other == b ? a : other, mult);
            }
        }
        r.remove_vertex(b);
        for (auto [other, mult]: moved) {
            r.add_edge(a, other == b ? a : other, mult);
        }
        junctions.push_back(a);
    }
    resolve_junctions(r, junctions);
    return r;
}

Diagram compose_par(const Diagram& f, const Diagram& g) {
    Diagram r;
    auto fmap = absorb(r, f);
    auto gmap = absorb(r, g);
    for (VertexId v: f.inputs()) {
        r.inputs_.push_back(fmap.at(v));
    }
    for (VertexId v: g.inputs()) {
        r.inputs_.push_back(gmap.at(v));
    }
    for (VertexId v: f.outputs()) {
        r.outputs_.push_back(fmap.at(v));
    }
    for (VertexId v: g.outputs()) {
        r.outputs_.push_back(gmap.at(v));
    }
    return r;
}

Diagram adjoint(const Diagram& d) {
    Diagram r = d;
    std::swap(r.mutable_inputs(), r.mutable_outputs());
    for (const auto& [id, v]: d.vertices()) {
        if (is_spider(v.kind)) {
            r.set_phase(id, -v.phase);
        }
    }
    r.mutable_scalar() = r.scalar().conj();
    return r;
}

namespace {

struct IsoState {
    const Diagram* a;
    const Diagram* b;
    std::map<VertexId, VertexId> ab;
    std::map<VertexId, VertexId> ba;

    bool try_pair(VertexId va, VertexId vb) {
        auto ita = ab.find(va);
        auto itb = ba.find(vb);
        if (ita != ab.end() || itb != ba.end()) {
            return ita != ab.end() && ita->second == vb;
        }
        const Vertex& x = a->vertex(va);
        const Vertex& y = b->vertex(vb);
        if (x.kind != y.kind || x.phase != y.phase) {
            return false;
        }
        if (a->degree(va) != b->degree(vb) || a->self_loops(va) != b->self_loops(vb)) {
            return false;
        }
        ab[va] = vb;
        ba[vb] = va;
        return true;
    }

    void unpair(VertexId va) {
        auto it = ab.find(va);
        if (it != ab.end()) {
            ba.erase(it->second);
            ab.erase(it);
        }
    }
};

bool extend(IsoState& st, std::vector<VertexId>::const_iterator it,
            std::vector<VertexId>::const_iterator end) {
    if (it == end) {
        // full mapping candidate: verify multiplicities both ways
        for (const auto& [e, mult]: st.a->edges()) {
            if (st.b->edge_multiplicity(st.ab.at(e.first), st.ab.at(e.second)) != mult) {
                return false;
            }
        }
        return true;
    }
    VertexId va = *it;
    if (st.ab.count(va) != 0) {
        return extend(st, std::next(it), end);
    }
    for (const auto& [vb, vert]: st.b->vertices()) {
        if (st.ba.count(vb) != 0) {
            continue;
        }
        std::map<VertexId, VertexId> ab_before = st.ab;
        std::map<VertexId, VertexId> ba_before = st.ba;
        if (st.try_pair(va, vb)) {
            // prune: mapped neighbors must agree on multiplicity
            bool ok = true;
            for (VertexId na: st.a->neighbors(va)) {
                auto m = st.ab.find(na);
                if (m != st.ab.end() &&
                    st.a->edge_multiplicity(va, na) != st.b->edge_multiplicity(vb, m->second)) {
                    ok = false;
                    break;
                }
            }
            if (ok && extend(st, std::next(it), end)) {
                return true;
            }
        }
        st.ab = std::move(ab_before);
        st.ba = std::move(ba_before);
    }
    return false;
}

bool isomorphic_impl(const Diagram& a, const Diagram& b, bool compare_scalar) {
    if (compare_scalar && !(a.scalar() == b.scalar())) {
        return false;
    }
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
        a.inputs().size() != b.inputs().size() || a.outputs().size() != b.outputs().size()) {
        return false;
    }
    IsoState st{&a, &b, {}, {}};
    // boundary order pins the first part of the mapping
    for (std::size_t i = 0; i < a.inputs().size(); ++i) {
        if (!st.try_pair(a.inputs()[i], b.inputs()[i])) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.outputs().size(); ++i) {
        if (!st.try_pair(a.outputs()[i], b.outputs()[i])) {
            return false;
        }
    }
    std::vector<VertexId> order;
    for (const auto& [id, v]: a.vertices()) {
        order.push_back(id);
    }
    return extend(st, order.begin(), order.end());
}

} // namespace

bool isomorphic(const Diagram& a, const Diagram& b) {
    return isomorphic_impl(a, b, true);
}

bool isomorphic_up_to_scalar(const Diagram& a, const Diagram& b) {
    return isomorphic_impl(a, b, false);
}

} // namespace zx
