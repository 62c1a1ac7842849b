#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zx/circuit.hpp"
#include "zx/error.hpp"
#include "zx/evaluate.hpp"
#include "zx/pattern.hpp"
#include "zx/simplify.hpp"
#include "zx/states.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace zx;

namespace {

using C = std::complex<double>;

ComplexMatrix mat2(C a, C b, C c, C d) {
    ComplexMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

ComplexMatrix pauli_x() { return mat2(0, 1, 1, 0); }
ComplexMatrix pauli_z() { return mat2(1, 0, 0, -1); }

ComplexMatrix rz(double a) { return mat2(1, 0, 0, std::exp(C(0, a))); }

ComplexMatrix hadamard2() {
    const double s = 1.0 / std::numbers::sqrt2;
    return mat2(s, s, s, -s);
}

} // namespace

TEST_CASE("circuit text parsing") {
    Circuit c = parse_circuit("qubits 2\nh 0\ncz 0 1\nh 1\n");
    CHECK(c.n_qubits == 2);
    CHECK(c.gates.size() == 3);

    Circuit phases = parse_circuit("qubits 1\nrz 0 1/2\nrx 0 3/4\n");
    CHECK(phases.gates[0].phase == Phase(1, 2));
    CHECK(phases.gates[1].phase == Phase(3, 4));

    CHECK_THROWS_AS(parse_circuit("h 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_circuit("qubits 1\nfoo 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_circuit("qubits 1\ncnot 0 1\n"), ValidationError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\ncnot 1 1\n"), ValidationError);
}

TEST_CASE("every gate compiles to its reference matrix") {
    auto gate_matrix = [](const std::string& line, std::size_t n) {
        Circuit c = parse_circuit("qubits " + std::to_string(n) + "\n" + line + "\n");
        return evaluate(compile_circuit(c));
    };
    CHECK(max_abs_diff(gate_matrix("h 0", 1), hadamard2()) < 1e-9);
    CHECK(max_abs_diff(gate_matrix("rz 0 1/1", 1), pauli_z()) < 1e-9);
    CHECK(max_abs_diff(gate_matrix("rx 0 1/1", 1), pauli_x()) < 1e-9);
    CHECK(max_abs_diff(gate_matrix("rz 0 1/3", 1), rz(std::numbers::pi / 3)) < 1e-9);
    CHECK(max_abs_diff(gate_matrix("rx 0 1/3", 1),
                       hadamard2() * rz(std::numbers::pi / 3) * hadamard2()) < 1e-9);

    ComplexMatrix cnot(4, 4);
    cnot.at(0, 0) = 1;
    cnot.at(1, 1) = 1;
    cnot.at(2, 3) = 1;
    cnot.at(3, 2) = 1;
    CHECK(max_abs_diff(gate_matrix("cnot 0 1", 2), cnot) < 1e-9);

    ComplexMatrix cz(4, 4);
    cz.at(0, 0) = 1;
    cz.at(1, 1) = 1;
    cz.at(2, 2) = 1;
    cz.at(3, 3) = -1;
    CHECK(max_abs_diff(gate_matrix("cz 0 1", 2), cz) < 1e-9);
    CHECK(max_abs_diff(gate_matrix("cz 1 0", 2), cz) < 1e-9);

    ComplexMatrix cp(4, 4);
    cp.at(0, 0) = 1;
    cp.at(1, 1) = 1;
    cp.at(2, 2) = 1;
    cp.at(3, 3) = std::exp(C(0, std::numbers::pi / 2));
    CHECK(max_abs_diff(gate_matrix("czp 0 1 1/2", 2), cp) < 1e-9);

    ComplexMatrix swap(4, 4);
    swap.at(0, 0) = 1;
    swap.at(1, 2) = 1;
    swap.at(2, 1) = 1;
    swap.at(3, 3) = 1;
    CHECK(max_abs_diff(gate_matrix("swap 0 1", 2), swap) < 1e-9);
}

TEST_CASE("circuit compilation is compositional") {
    Circuit full = parse_circuit("qubits 2\nh 0\ncnot 0 1\nrz 1 1/4\n");
    Circuit head = parse_circuit("qubits 2\nh 0\n");
    Circuit tail = parse_circuit("qubits 2\ncnot 0 1\nrz 1 1/4\n");
    CHECK(isomorphic(compile_circuit(full),
                     compose_seq(compile_circuit(head), compile_circuit(tail))));
}

TEST_CASE("two-qubit Fourier circuit matches the reference transform") {
    Circuit qft = parse_circuit("qubits 2\nh 0\nczp 0 1 1/2\nh 1\nswap 0 1\n");
    ComplexMatrix got = evaluate(compile_circuit(qft));
    ComplexMatrix want(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = 0; k < 4; ++k) {
            want.at(j, k) =
                0.5 * std::exp(C(0, 2.0 * std::numbers::pi * double(j * k) / 4.0));
        }
    }
    CHECK(max_abs_diff(got, want) < 1e-9);

    // without the trailing swap the output wires come out reversed
    Circuit qft_ns = parse_circuit("qubits 2\nh 0\nczp 0 1 1/2\nh 1\n");
    ComplexMatrix got_ns = evaluate(compile_circuit(qft_ns));
    ComplexMatrix want_ns(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        const std::size_t rev = ((j & 1) << 1) | (j >> 1);
        for (std::size_t k = 0; k < 4; ++k) {
            want_ns.at(rev, k) = want.at(j, k);
        }
    }
    CHECK(max_abs_diff(got_ns, want_ns) < 1e-9);
}

TEST_CASE("pattern text parsing and validation") {
    Pattern p = parse_pattern("in 1; in 2; N 3; N 4; E 1 3; E 2 3; E 3 4; M 2 0; M 3 0; "
                              "out 1; out 4");
    CHECK(p.inputs.size() == 2);
    CHECK(p.entanglers.size() == 3);
    CHECK(p.measurements.size() == 2);

    // measuring a qubit twice is rejected
    CHECK_THROWS_AS(parse_pattern("in 1; out 1; N 2; M 2 0; M 2 1/2"), ValidationError);
    // measuring an output is rejected
    CHECK_THROWS_AS(parse_pattern("in 1; out 1; M 1 0"), ValidationError);
    // every non-output qubit needs its measurement
    CHECK_THROWS_AS(parse_pattern("in 1; N 2; out 2; E 1 2"), ValidationError);
    CHECK_THROWS_AS(parse_pattern("in 1; out 1; E 1 9; M 9 0"), ValidationError);
    CHECK_THROWS_AS(parse_pattern("in 1; frobnicate 2"), SyntaxError);
}

TEST_CASE("empty pattern is the identity") {
    Pattern p = parse_pattern("in 1; out 1");
    CHECK(isomorphic(compile_pattern(p), Diagram::identity(1)));
}

TEST_CASE("single-measurement pattern implements H then a phase") {
    // chain in-1-2-out, measure 1 at angle a: the map is H Z_a up to scalar
    Pattern p = parse_pattern("in 1; N 2; E 1 2; M 1 1/4; out 2");
    ComplexMatrix got = evaluate(compile_pattern(p));
    ComplexMatrix want = hadamard2() * rz(std::numbers::pi / 4);
    auto cmp = equal_matrices(got, want, CompareMode::UpToGlobalScalar, 1e-9);
    CHECK(cmp.equal);
}

TEST_CASE("controlled-not pattern reduces to the controlled-not gate") {
    Pattern p = parse_pattern("in 1; in 2; N 3; N 4; E 1 3; E 2 3; E 3 4; "
                              "M 2 0; M 3 0; out 1; out 4");
    Diagram reduced = simplify(compile_pattern(p), Strategy::Full);
    Diagram cnot = compile_circuit(parse_circuit("qubits 2\ncnot 0 1\n"));
    CHECK(isomorphic_up_to_scalar(reduced, cnot));
    auto cmp = equal_matrices(evaluate(reduced), evaluate(cnot),
                              CompareMode::UpToGlobalScalar, 1e-9);
    CHECK(cmp.equal);
}

TEST_CASE("Euler-angle pattern reduces to its circuit form") {
    Pattern euler = parse_pattern("in 1; N 2; N 3; N 4; N 5; E 1 2; E 2 3; E 3 4; "
                                  "E 4 5; M 1 1/4; M 2 1/2; M 3 1/3; M 4 0; out 5");
    Diagram red = simplify(compile_pattern(euler), Strategy::Full);
    Diagram circ = simplify(
        compile_circuit(parse_circuit("qubits 1\nrz 0 1/4\nrx 0 1/2\nrz 0 1/3\n")),
        Strategy::Full);
    CHECK(isomorphic_up_to_scalar(red, circ));
}

TEST_CASE("graph states") {
    // two-vertex path: cz applied to two plus states
    Diagram path2 = graph_state({{0, 1}}, 2);
    ComplexMatrix got = evaluate(path2);
    ComplexMatrix want(4, 1);
    want.at(0, 0) = 1;
    want.at(1, 0) = 1;
    want.at(2, 0) = 1;
    want.at(3, 0) = -1;
    auto cmp = equal_matrices(got, want, CompareMode::UpToGlobalScalar, 1e-9);
    CHECK(cmp.equal);

    // single spider with three legs: GHZ up to scalar
    Diagram ghz(0, 3);
    VertexId z = ghz.add_spider(VertexKind::Z, Phase());
    for (VertexId out: ghz.outputs()) {
        ghz.add_edge(z, out);
    }
    ComplexMatrix ghz_m = evaluate(ghz);
    ComplexMatrix ghz_want(8, 1);
    ghz_want.at(0, 0) = 1;
    ghz_want.at(7, 0) = 1;
    CHECK(equal_matrices(ghz_m, ghz_want, CompareMode::UpToGlobalScalar, 1e-9).equal);

    // empty graph on one vertex: the plus state
    Diagram plus = graph_state({}, 1);
    ComplexMatrix plus_m = evaluate(plus);
    ComplexMatrix plus_want(2, 1);
    plus_want.at(0, 0) = 1;
    plus_want.at(1, 0) = 1;
    CHECK(equal_matrices(plus_m, plus_want, CompareMode::UpToGlobalScalar, 1e-9).equal);

    CHECK_THROWS_AS(graph_state({{0, 0}}, 1), ValidationError);
    CHECK_THROWS_AS(graph_state({{0, 1}, {1, 0}}, 2), ValidationError);
}

TEST_CASE("teleportation branches compose with their corrections") {
    ComplexMatrix want[4] = {ComplexMatrix::identity(2), pauli_z(), pauli_x(),
                             pauli_x() * pauli_z()};
    for (std::size_t i = 0; i < 4; ++i) {
        TeleportBranch tb = teleport_branch(i);
        CHECK(equal_matrices(evaluate(tb.branch), want[i],
                             CompareMode::UpToGlobalScalar, 1e-9)
                  .equal);
        Diagram closed = compose_seq(tb.branch, tb.correction);
        CHECK(equal_matrices(evaluate(closed), ComplexMatrix::identity(2),
                             CompareMode::UpToGlobalScalar, 1e-9)
                  .equal);
    }
    CHECK_THROWS_AS(teleport_branch(4), ZXError);
}
