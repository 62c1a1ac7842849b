#include "zx/evaluate.hpp"

#include "zx/error.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>

namespace zx {

ComplexMatrix hadamard_matrix() {
    const double s = 1.0 / std::numbers::sqrt2;
    ComplexMatrix h(2, 2);
    h.at(0, 0) = s;
    h.at(0, 1) = s;
    h.at(1, 0) = s;
    h.at(1, 1) = -s;
    return h;
}

ComplexMatrix spider_matrix(VertexKind kind, std::size_t n_in, std::size_t n_out,
                            const Phase& phase) {
    if (!is_spider(kind)) {
        throw ZXError("spider_matrix requires Z or X");
    }
    if (n_in + n_out > 14) {
        throw TooLargeError("spider with more than 14 legs");
    }
    const Complex ph = std::exp(Complex(0.0, phase.to_radians()));
    const std::size_t rows = std::size_t{1} << n_out;
    const std::size_t cols = std::size_t{1} << n_in;
    ComplexMatrix m(rows, cols);
    if (kind == VertexKind::Z) {
        m.at(0, 0) += 1.0;
        m.at(rows - 1, cols - 1) += ph;
        return m;
    }
    // X spider: entry = 2^{-(k/2)} (1 + e^{i a} (-1)^{parity}) over all legs
    const std::size_t legs = n_in + n_out;
    const double norm = std::pow(2.0, -static_cast<double>(legs) / 2.0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const int parity = (std::popcount(r) + std::popcount(c)) & 1;
            m.at(r, c) = norm * (1.0 + ph * (parity ? -1.0 : 1.0));
        }
    }
    return m;
}

namespace {

struct Tensor {
    std::vector<int> bonds; // bonds[0] is the most significant index bit
    std::vector<Complex> amps;

    std::size_t rank() const { return bonds.size(); }
};

int bit_of(std::size_t idx, std::size_t rank, std::size_t pos) {
    return static_cast<int>((idx >> (rank - 1 - pos)) & 1u);
}

/// Trace out any bond appearing twice within the tensor.
void contract_self(Tensor& t, std::size_t max_size) {
    for (;;) {
        std::size_t p = 0;
        std::size_t q = 0;
        bool found = false;
        for (std::size_t i = 0; i < t.bonds.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < t.bonds.size(); ++j) {
                if (t.bonds[i] == t.bonds[j]) {
                    p = i;
                    q = j;
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            return;
        }
        const std::size_t rank = t.rank();
        Tensor out;
        for (std::size_t i = 0; i < rank; ++i) {
            if (i != p && i != q) {
                out.bonds.push_back(t.bonds[i]);
            }
        }
        out.amps.assign(std::size_t{1} << out.rank(), Complex{});
        if (out.amps.size() > max_size) {
            throw TooLargeError("intermediate tensor too large");
        }
        for (std::size_t idx = 0; idx < t.amps.size(); ++idx) {
            if (bit_of(idx, rank, p) != bit_of(idx, rank, q)) {
                continue;
            }
            std::size_t oidx = 0;
            for (std::size_t i = 0; i < rank; ++i) {
                if (i != p && i != q) {
                    oidx = (oidx << 1) | static_cast<unsigned>(bit_of(idx, rank, i));
                }
            }
            out.amps[oidx] += t.amps[idx];
        }
        t = std::move(out);
    }
}

Tensor contract(const Tensor& a, const Tensor& b, std::size_t max_size) {
    std::vector<std::size_t> shared_a;
    std::vector<std::size_t> shared_b;
    for (std::size_t i = 0; i < a.bonds.size(); ++i) {
        for (std::size_t j = 0; j < b.bonds.size(); ++j) {
            if (a.bonds[i] == b.bonds[j]) {
                shared_a.push_back(i);
                shared_b.push_back(j);
            }
        }
    }
    Tensor out;
    std::vector<std::size_t> free_a;
    std::vector<std::size_t> free_b;
    for (std::size_t i = 0; i < a.bonds.size(); ++i) {
        if (std::find(shared_a.begin(), shared_a.end(), i) == shared_a.end()) {
            free_a.push_back(i);
            out.bonds.push_back(a.bonds[i]);
        }
    }
    for (std::size_t j = 0; j < b.bonds.size(); ++j) {
        if (std::find(shared_b.begin(), shared_b.end(), j) == shared_b.end()) {
            free_b.push_back(j);
            out.bonds.push_back(b.bonds[j]);
        }
    }
    out.amps.assign(std::size_t{1} << out.rank(), Complex{});
    if (out.amps.size() > max_size) {
        throw TooLargeError("intermediate tensor too large");
    }
    const std::size_t nfa = free_a.size();
    const std::size_t nfb = free_b.size();
    const std::size_t ns = shared_a.size();
    for (std::size_t fa = 0; fa < (std::size_t{1} << nfa); ++fa) {
        for (std::size_t s = 0; s < (std::size_t{1} << ns); ++s) {
            std::size_t ia = 0;
            {
                std::vector<int> bits(a.bonds.size(), 0);
                for (std::size_t i = 0; i < nfa; ++i) {
                    bits[free_a[i]] = bit_of(fa, nfa, i);
                }
                for (std::size_t i = 0; i < ns; ++i) {
                    bits[shared_a[i]] = bit_of(s, ns, i);
                }
                for (std::size_t i = 0; i < a.bonds.size(); ++i) {
                    ia = (ia << 1) | static_cast<unsigned>(bits[i]);
                }
            }
            const Complex va = a.amps[ia];
            if (va == Complex{}) {
                continue;
            }
            for (std::size_t fb = 0; fb < (std::size_t{1} << nfb); ++fb) {
                std::size_t ib = 0;
                {
                    std::vector<int> bits(b.bonds.size(), 0);
                    for (std::size_t i = 0; i < nfb; ++i) {
                        bits[free_b[i]] = bit_of(fb, nfb, i);
                    }
                    for (std::size_t i = 0; i < ns; ++i) {
                        bits[shared_b[i]] = bit_of(s, ns, i);
                    }
                    for (std::size_t i = 0; i < b.bonds.size(); ++i) {
                        ib = (ib << 1) | static_cast<unsigned>(bits[i]);
                    }
                }
                out.amps[(fa << nfb) | fb] += va * b.amps[ib];
            }
        }
    }
    return out;
}

Tensor vertex_tensor(const Vertex& v, std::size_t legs) {
    Tensor t;
    t.amps.assign(std::size_t{1} << legs, Complex{});
    if (v.kind == VertexKind::H) {
        const double s = 1.0 / std::numbers::sqrt2;
        t.amps = {s, s, s, -s};
        return t;
    }
    const Complex ph = std::exp(Complex(0.0, v.phase.to_radians()));
    if (v.kind == VertexKind::Z) {
        t.amps.front() += 1.0;
        t.amps.back() += ph;
        return t;
    }
    // X spider
    const double norm = std::pow(2.0, -static_cast<double>(legs) / 2.0);
    for (std::size_t idx = 0; idx < t.amps.size(); ++idx) {
        const int parity = std::popcount(idx) & 1;
        t.amps[idx] = norm * (1.0 + ph * (parity ? -1.0 : 1.0));
    }
    return t;
}

} // namespace

ComplexMatrix evaluate(const Diagram& d, const EvaluateOptions& opts) {
    if (!d.is_concrete()) {
        throw SymbolicScalarError("diagram contains symbolic phases");
    }
    if (d.inputs().size() + d.outputs().size() > 14) {
        throw TooLargeError("more than 14 open wires");
    }
    if (d.num_vertices() > 64 + d.inputs().size() + d.outputs().size()) {
        throw TooLargeError("more than 64 internal vertices");
    }
    if (auto violations = d.validate(); !violations.empty()) {
        throw ValidationError("evaluate on invalid diagram: " + violations.front());
    }

    // assign a bond id to every edge instance
    struct BondEnd {
        VertexId vertex;
    };
    int next_bond = 0;
    std::map<VertexId, std::vector<int>> vertex_bonds; // per non-boundary vertex
    std::map<int, VertexId> open_bonds;                // bond -> boundary vertex
    std::vector<Tensor> tensors;

    auto is_boundary = [&](VertexId v) { return d.vertex(v).kind == VertexKind::Boundary; };

    for (const auto& [id, v]: d.vertices()) {
        if (v.kind != VertexKind::Boundary) {
            vertex_bonds[id]; // ensure entry, keeps degree-0 spiders
        }
    }
    for (const auto& [e, mult]: d.edges()) {
        for (int m = 0; m < mult; ++m) {
            int bond = next_bond++;
            const bool ba = is_boundary(e.first);
            const bool bb = is_boundary(e.second);
            if (ba && bb) {
                // bare wire: explicit identity tensor with two fresh legs
                // (the same boundary pair may carry parallel edges only in
                // invalid diagrams, which were rejected above)
                Tensor t;
                t.bonds = {bond, next_bond};
                open_bonds[bond] = e.first;
                open_bonds[next_bond] = e.second;
                ++next_bond;
                t.amps = {1.0, 0.0, 0.0, 1.0};
                tensors.push_back(std::move(t));
                continue;
            }
            if (ba) {
                open_bonds[bond] = e.first;
            } else {
                vertex_bonds[e.first].push_back(bond);
            }
            if (bb) {
                open_bonds[bond] = e.second;
            } else {
                vertex_bonds[e.second].push_back(bond);
            }
        }
    }
    for (const auto& [id, bonds]: vertex_bonds) {
        Tensor t = vertex_tensor(d.vertex(id), bonds.size());
        t.bonds = bonds;
        contract_self(t, opts.max_tensor_size);
        tensors.push_back(std::move(t));
    }

    // contract until no bond is shared between two tensors
    for (;;) {
        std::size_t best_i = 0;
        std::size_t best_j = 0;
        std::size_t best_cost = SIZE_MAX;
        int best_bond = INT_MAX;
        bool found = false;
        for (std::size_t i = 0; i < tensors.size(); ++i) {
            for (std::size_t j = i + 1; j < tensors.size(); ++j) {
                std::size_t shared = 0;
                int min_bond = INT_MAX;
                for (int ba: tensors[i].bonds) {
                    for (int bb: tensors[j].bonds) {
                        if (ba == bb) {
                            ++shared;
                            min_bond = std::min(min_bond, ba);
                        }
                    }
                }
                if (shared == 0) {
                    continue;
                }
                const std::size_t cost =
                    tensors[i].rank() + tensors[j].rank() - 2 * shared;
                if (opts.naive_schedule) {
                    if (!found || min_bond < best_bond) {
                        best_bond = min_bond;
                        best_i = i;
                        best_j = j;
                        found = true;
                    }
                } else if (!found || cost < best_cost ||
                           (cost == best_cost && min_bond < best_bond)) {
                    best_cost = cost;
                    best_bond = min_bond;
                    best_i = i;
                    best_j = j;
                    found = true;
                }
            }
        }
        if (!found) {
            break;
        }
        Tensor merged = contract(tensors[best_i], tensors[best_j], opts.max_tensor_size);
        contract_self(merged, opts.max_tensor_size);
        tensors.erase(tensors.begin() + static_cast<std::ptrdiff_t>(best_j));
        tensors[best_i] = std::move(merged);
    }

    // combine the disconnected remainders
    Tensor total;
    total.amps = {1.0};
    for (const auto& t: tensors) {
        Tensor merged = contract(total, t, opts.max_tensor_size);
        total = std::move(merged);
    }

    // order legs by boundary position: outputs (msb first), then inputs
    std::map<VertexId, std::size_t> leg_pos;
    const std::size_t n_out = d.outputs().size();
    const std::size_t n_in = d.inputs().size();
    for (std::size_t i = 0; i < n_out; ++i) {
        leg_pos[d.outputs()[i]] = i;
    }
    for (std::size_t i = 0; i < n_in; ++i) {
        leg_pos[d.inputs()[i]] = n_out + i;
    }
    std::vector<std::size_t> perm(total.rank()); // position in (outs, ins) order
    for (std::size_t i = 0; i < total.rank(); ++i) {
        perm[i] = leg_pos.at(open_bonds.at(total.bonds[i]));
    }

    const Complex sc = d.scalar().to_complex();
    ComplexMatrix m(std::size_t{1} << n_out, std::size_t{1} << n_in);
    for (std::size_t idx = 0; idx < total.amps.size(); ++idx) {
        std::size_t row = 0;
        std::size_t col = 0;
        for (std::size_t i = 0; i < total.rank(); ++i) {
            const unsigned bit = static_cast<unsigned>(bit_of(idx, total.rank(), i));
            if (perm[i] < n_out) {
                row |= bit << (n_out - 1 - perm[i]);
            } else {
                col |= bit << (n_in - 1 - (perm[i] - n_out));
            }
        }
        m.at(row, col) = total.amps[idx] * sc;
    }
    return m;
}

} // namespace zx
