#include "zx/pattern.hpp"

#include "zx/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace zx {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

Pattern parse_pattern(const std::string& text) {
    Pattern p;
    // commands split on newlines and semicolons
    std::vector<std::string> commands;
    {
        std::string cur;
        for (char c: text) {
            if (c == '\n' || c == ';') {
                commands.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        commands.push_back(cur);
    }
    int line_no = 0;
    for (const std::string& raw: commands) {
        ++line_no;
        std::istringstream ss(raw);
        std::string op;
        if (!(ss >> op)) {
            continue;
        }
        if (op[0] == '#') {
            continue;
        }
        op = lower(op);
        auto read_index = [&]() {
            long v = -1;
            if (!(ss >> v) || v < 0) {
                throw SyntaxError("expected qubit index", line_no, 1);
            }
            return static_cast<std::size_t>(v);
        };
        if (op == "in") {
            p.inputs.push_back(read_index());
        } else if (op == "out") {
            p.outputs.push_back(read_index());
        } else if (op == "n") {
            p.preparations.push_back(read_index());
        } else if (op == "e") {
            std::size_t a = read_index();
            std::size_t b = read_index();
            p.entanglers.emplace_back(a, b);
        } else if (op == "m") {
            std::size_t q = read_index();
            std::string tok;
            if (!(ss >> tok)) {
                throw SyntaxError("measurement needs an angle", line_no, 1);
            }
            try {
                p.measurements.push_back({q, Phase::parse(tok)});
            } catch (const ZXError& e) {
                throw SyntaxError(e.what(), line_no, 1);
            }
        } else {
            throw SyntaxError("unknown pattern command '" + op + "'", line_no, 1);
        }
        std::string extra;
        if (ss >> extra && extra[0] != '#') {
            throw SyntaxError("trailing tokens after command", line_no, 1);
        }
    }

    // validation
    std::set<std::size_t> declared;
    for (std::size_t q: p.inputs) {
        if (!declared.insert(q).second) {
            throw ValidationError("qubit " + std::to_string(q) + " declared twice");
        }
    }
    for (std::size_t q: p.preparations) {
        if (!declared.insert(q).second) {
            throw ValidationError("qubit " + std::to_string(q) + " declared twice");
        }
    }
    for (auto [a, b]: p.entanglers) {
        if (declared.count(a) == 0 || declared.count(b) == 0) {
            throw ValidationError("entangler touches undeclared qubit");
        }
        if (a == b) {
            throw ValidationError("entangler needs two distinct qubits");
        }
    }
    std::set<std::size_t> outputs(p.outputs.begin(), p.outputs.end());
    if (outputs.size() != p.outputs.size()) {
        throw ValidationError("duplicate output qubit");
    }
    for (std::size_t q: outputs) {
        if (declared.count(q) == 0) {
            throw ValidationError("output qubit " + std::to_string(q) + " undeclared");
        }
    }
    std::set<std::size_t> measured;
    for (const auto& m: p.measurements) {
        if (declared.count(m.qubit) == 0) {
            throw ValidationError("measured qubit " + std::to_string(m.qubit) +
                                  " undeclared");
        }
        if (outputs.count(m.qubit) != 0) {
            throw ValidationError("output qubit " + std::to_string(m.qubit) +
                                  " cannot be measured");
        }
        if (!measured.insert(m.qubit).second) {
            throw ValidationError("qubit " + std::to_string(m.qubit) +
                                  " measured twice");
        }
    }
    for (std::size_t q: declared) {
        if (outputs.count(q) == 0 && measured.count(q) == 0) {
            throw ValidationError("non-output qubit " + std::to_string(q) +
                                  " is never measured");
        }
    }
    return p;
}

Diagram compile_pattern(const Pattern& p) {
    Diagram d(p.inputs.size(), p.outputs.size());
    // dangling wire end per qubit
    std::map<std::size_t, VertexId> ends;
    for (std::size_t i = 0; i < p.inputs.size(); ++i) {
        ends[p.inputs[i]] = d.inputs()[i];
    }
    for (std::size_t q: p.preparations) {
        ends[q] = d.add_spider(VertexKind::Z, Phase()); // the point |0>+|1>
    }
    for (auto [a, b]: p.entanglers) {
        // cz: plain spider on a, Hadamard-conjugated X spider on b
        VertexId za = d.add_spider(VertexKind::Z, Phase());
        d.add_edge(ends.at(a), za);
        ends[a] = za;
        VertexId h1 = d.add_h();
        VertexId xb = d.add_spider(VertexKind::X, Phase());
        VertexId h2 = d.add_h();
        d.add_edge(ends.at(b), h1);
        d.add_edge(h1, xb);
        d.add_edge(xb, h2);
        ends[b] = h2;
        d.add_edge(za, xb);
        d.multiply_scalar(Scalar::sqrt2_pow(1));
    }
    for (const auto& m: p.measurements) {
        VertexId cap = d.add_spider(VertexKind::Z, m.angle);
        d.add_edge(ends.at(m.qubit), cap);
        ends.erase(m.qubit);
    }
    for (std::size_t i = 0; i < p.outputs.size(); ++i) {
        d.add_edge(ends.at(p.outputs[i]), d.outputs()[i]);
    }
    return d;
}

} // namespace zx
