#include "zx/circuit.hpp"

#include "zx/error.hpp"

#include <sstream>

namespace zx {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) {
        if (t[0] == '#') {
            break;
        }
        toks.push_back(t);
    }
    return toks;
}

std::size_t parse_index(const std::string& tok, int line_no) {
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size() || v < 0) {
            throw std::invalid_argument(tok);
        }
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw SyntaxError("expected qubit index, got '" + tok + "'", line_no, 1);
    }
}

} // namespace

Circuit parse_circuit(const std::string& text) {
    Circuit c;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) {
            continue;
        }
        if (!have_header) {
            if (toks.size() != 2 || toks[0] != "qubits") {
                throw SyntaxError("expected 'qubits N' header", line_no, 1);
            }
            c.n_qubits = parse_index(toks[1], line_no);
            have_header = true;
            continue;
        }
        Gate g;
        const std::string& op = toks[0];
        auto expect = [&](std::size_t n) {
            if (toks.size() != n + 1) {
                throw SyntaxError("gate '" + op + "' expects " + std::to_string(n) +
                                      " arguments",
                                  line_no, 1);
            }
        };
        auto parse_phase_tok = [&](const std::string& tok) {
            try {
                return Phase::parse(tok);
            } catch (const ZXError& e) {
                throw SyntaxError(e.what(), line_no, 1);
            }
        };
        if (op == "h") {
            expect(1);
            g = {Gate::Kind::H, parse_index(toks[1], line_no)};
        } else if (op == "rz" || op == "rx") {
            expect(2);
            g = {op == "rz" ? Gate::Kind::RZ : Gate::Kind::RX,
                 parse_index(toks[1], line_no), 0, parse_phase_tok(toks[2])};
        } else if (op == "cnot") {
            expect(2);
            g = {Gate::Kind::CNOT, parse_index(toks[1], line_no),
                 parse_index(toks[2], line_no)};
        } else if (op == "cz") {
            expect(2);
            g = {Gate::Kind::CZ, parse_index(toks[1], line_no),
                 parse_index(toks[2], line_no)};
        } else if (op == "czp") {
            expect(3);
            g = {Gate::Kind::CZPhase, parse_index(toks[1], line_no),
                 parse_index(toks[2], line_no), parse_phase_tok(toks[3])};
        } else if (op == "swap") {
            expect(2);
            g = {Gate::Kind::SWAP, parse_index(toks[1], line_no),
                 parse_index(toks[2], line_no)};
        } else {
            throw SyntaxError("unknown gate '" + op + "'", line_no, 1);
        }
        c.gates.push_back(g);
    }
    if (!have_header) {
        throw SyntaxError("missing 'qubits N' header", 1, 1);
    }
    for (const Gate& g: c.gates) {
        const bool two = g.kind == Gate::Kind::CNOT || g.kind == Gate::Kind::CZ ||
                         g.kind == Gate::Kind::CZPhase || g.kind == Gate::Kind::SWAP;
        if (g.q0 >= c.n_qubits || (two && g.q1 >= c.n_qubits)) {
            throw ValidationError("gate touches qubit out of range");
        }
        if (two && g.q0 == g.q1) {
            throw ValidationError("two-qubit gate needs distinct qubits");
        }
    }
    return c;
}

namespace {

/// Incremental circuit builder: tracks the dangling wire end per qubit.
struct WireTracker {
    Diagram d;
    std::vector<VertexId> ends;

    explicit WireTracker(std::size_t n): d(n, n) {
        ends = d.inputs();
    }

    /// Splice a fresh vertex into qubit q's wire.
    VertexId splice(std::size_t q, VertexKind kind, Phase phase = Phase()) {
        VertexId v = d.add_vertex(kind, std::move(phase));
        d.add_edge(ends[q], v);
        ends[q] = v;
        return v;
    }

    void cnot(std::size_t control, std::size_t target) {
        VertexId z = splice(control, VertexKind::Z);
        VertexId x = splice(target, VertexKind::X);
        d.add_edge(z, x);
        d.multiply_scalar(Scalar::sqrt2_pow(1));
    }

    void cz(std::size_t a, std::size_t b) {
        // Hadamard-conjugated target keeps both H boxes on the wire, which
        // is what lets two adjacent cz gates cancel by HHCancel
        splice(b, VertexKind::H);
        cnot(a, b);
        splice(b, VertexKind::H);
    }

    Diagram finish() {
        for (std::size_t q = 0; q < ends.size(); ++q) {
            d.add_edge(ends[q], d.outputs()[q]);
        }
        return std::move(d);
    }
};

} // namespace

Diagram compile_circuit(const Circuit& c) {
    WireTracker w(c.n_qubits);
    for (const Gate& g: c.gates) {
        switch (g.kind) {
            case Gate::Kind::H:
                w.splice(g.q0, VertexKind::H);
                break;
            case Gate::Kind::RZ:
                w.splice(g.q0, VertexKind::Z, g.phase);
                break;
            case Gate::Kind::RX:
                w.splice(g.q0, VertexKind::X, g.phase);
                break;
            case Gate::Kind::CNOT:
                w.cnot(g.q0, g.q1);
                break;
            case Gate::Kind::CZ:
                w.cz(g.q0, g.q1);
                break;
            case Gate::Kind::CZPhase: {
                // exact controlled-phase: rz(a/2) on the control, then two
                // cnots around rz(-a/2) on the target, then rz(a/2) there
                if (!g.phase.is_concrete()) {
                    throw ZXError("controlled phase needs a concrete angle");
                }
                Phase half(g.phase.num(), g.phase.den() * 2);
                w.splice(g.q0, VertexKind::Z, half);
                w.cnot(g.q0, g.q1);
                w.splice(g.q1, VertexKind::Z, -half);
                w.cnot(g.q0, g.q1);
                w.splice(g.q1, VertexKind::Z, half);
                break;
            }
            case Gate::Kind::SWAP:
                std::swap(w.ends[g.q0], w.ends[g.q1]);
                break;
        }
    }
    return w.finish();
}

} // namespace zx
