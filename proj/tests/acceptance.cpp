// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Everything runs at the tolerances stated inline.

#include "zx/circuit.hpp"
#include "zx/evaluate.hpp"
#include "zx/observable.hpp"
#include "zx/pattern.hpp"
#include "zx/rules.hpp"
#include "zx/simplify.hpp"
#include "zx/states.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace zx;
using C = std::complex<double>;

namespace {

int g_failures = 0;

struct Criterion {
    std::string label;
    bool ok = true;
    std::ostringstream why;

    Criterion(int number, std::string text): label(std::move(text)), number_(number) {}

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) {
                why << "; ";
            }
            ok = false;
            why << what;
        }
    }

    ~Criterion() {
        if (ok) {
            std::printf("criterion %d [%s]: PASS\n", number_, label.c_str());
        } else {
            std::printf("criterion %d [%s]: FAIL (%s)\n", number_, label.c_str(),
                        why.str().c_str());
            ++g_failures;
        }
    }

private:
    int number_;
};

Diagram circuit(const std::string& text) {
    return compile_circuit(parse_circuit(text));
}

ComplexMatrix mat2(C a, C b, C c, C d) {
    ComplexMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

ComplexMatrix hadamard2() {
    const double s = 1.0 / std::numbers::sqrt2;
    return mat2(s, s, s, -s);
}

ComplexMatrix rz(double a) { return mat2(1, 0, 0, std::exp(C(0, a))); }

Diagram swap_diagram() {
    Diagram d(2, 2);
    d.add_edge(d.inputs()[0], d.outputs()[1]);
    d.add_edge(d.inputs()[1], d.outputs()[0]);
    return d;
}

ObservableStructure standard_structure(std::size_t d) {
    std::vector<ComplexMatrix> basis;
    for (std::size_t i = 0; i < d; ++i) {
        ComplexMatrix v(d, 1);
        v.at(i, 0) = 1.0;
        basis.push_back(v);
    }
    return obs_from_basis(basis);
}

bool equal_up_to_scalar(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    return equal_matrices(a, b, CompareMode::UpToGlobalScalar, tol).equal;
}

void criterion_1_gate_algebra() {
    Criterion c(1, "gate algebra by rewriting alone");

    Diagram cnot2 = simplify(circuit("qubits 2\ncnot 0 1\ncnot 0 1\n"));
    c.require(isomorphic(cnot2, Diagram::identity(2)),
              "cnot.cnot does not rewrite to the identity");
    c.require(cnot2.scalar().is_one(), "cnot.cnot scalar is not exactly one");

    Diagram cz2 = simplify(circuit("qubits 2\ncz 0 1\ncz 0 1\n"));
    c.require(isomorphic(cz2, Diagram::identity(2)),
              "cz.cz does not rewrite to the identity");
    c.require(cz2.scalar().is_one(), "cz.cz scalar is not exactly one");

    // triple alternating cnot: one bialgebra step, then the shrinking rules
    Diagram triple = circuit("qubits 2\ncnot 0 1\ncnot 1 0\ncnot 0 1\n");
    auto squares = find_matches(triple, RuleId::Bialgebra);
    c.require(!squares.empty(), "no bialgebra square in the triple-cnot diagram");
    if (!squares.empty()) {
        Diagram stepped = apply(triple, squares.front());
        Diagram reduced = simplify(stepped);
        c.require(isomorphic(reduced, swap_diagram()),
                  "triple cnot does not reduce to the wire crossing");
        c.require(reduced.scalar().is_one(), "triple cnot scalar is not exactly one");
    }
}

void criterion_2_fourier_simulation() {
    Criterion c(2, "two-qubit Fourier transform simulation");

    Diagram qft = circuit("qubits 2\nh 0\nczp 0 1 1/2\nh 1\nswap 0 1\n");
    // the input word 10 enters little-endian: the 1 sits on the wire whose
    // Hadamard comes last, as in the source derivation
    Diagram preps(0, 2);
    VertexId p0 = preps.add_spider(VertexKind::X, Phase());     // |0>
    VertexId p1 = preps.add_spider(VertexKind::X, Phase::pi()); // |1>
    preps.add_edge(p0, preps.outputs()[0]);
    preps.add_edge(p1, preps.outputs()[1]);
    Diagram run = compose_seq(preps, qft);
    Diagram reduced = simplify(run, Strategy::Full);

    c.require(reduced.connected_components() == 2,
              "simplified state is not split into two components");

    ComplexMatrix want(4, 1); // (|0> - |1>) (x) (|0> + i|1>)
    want.at(0, 0) = 1.0;
    want.at(1, 0) = C(0, 1);
    want.at(2, 0) = -1.0;
    want.at(3, 0) = C(0, -1);
    c.require(equal_up_to_scalar(evaluate(reduced), want, 1e-9),
              "simplified state evaluates to the wrong vector");
    c.require(equal_up_to_scalar(evaluate(run), want, 1e-9),
              "unsimplified run evaluates to the wrong vector");
}

void criterion_3_one_way_verification() {
    Criterion c(3, "one-way computation verification");

    Pattern cnot_pat = parse_pattern("in 1; in 2; N 3; N 4; E 1 3; E 2 3; E 3 4; "
                                     "M 2 0; M 3 0; out 1; out 4");
    Diagram reduced = simplify(compile_pattern(cnot_pat), Strategy::Full);
    Diagram cnot = circuit("qubits 2\ncnot 0 1\n");
    c.require(isomorphic_up_to_scalar(reduced, cnot),
              "pattern does not reduce to the controlled-not diagram");
    c.require(equal_up_to_scalar(evaluate(reduced), evaluate(cnot), 1e-9),
              "reduced pattern evaluates wrongly");

    // five-qubit chain implementing Z_g X_b Z_a via measurement angles
    Pattern euler = parse_pattern("in 1; N 2; N 3; N 4; N 5; "
                                  "E 1 2; E 2 3; E 3 4; E 4 5; "
                                  "M 1 1/4; M 2 1/2; M 3 1/3; M 4 0; out 5");
    ComplexMatrix got = evaluate(compile_pattern(euler));
    const double a = std::numbers::pi / 4;
    const double b = std::numbers::pi / 2;
    const double g = std::numbers::pi / 3;
    ComplexMatrix want = rz(g) * (hadamard2() * rz(b) * hadamard2()) * rz(a);
    c.require(equal_up_to_scalar(got, want, 1e-9),
              "Euler-angle pattern does not match the gate product");
}

void criterion_4_state_transfer() {
    Criterion c(4, "state transfer protocol");

    // the two-projection construction: a phase-0 spider with 2 ins, 2 outs
    Diagram proj(2, 2);
    VertexId s = proj.add_spider(VertexKind::Z, Phase());
    for (VertexId bnd: {proj.inputs()[0], proj.inputs()[1], proj.outputs()[0],
                        proj.outputs()[1]}) {
        proj.add_edge(bnd, s);
    }
    ComplexMatrix p = evaluate(proj);
    ComplexMatrix want(4, 4);
    want.at(0, 0) = 1.0;
    want.at(3, 3) = 1.0;
    c.require(max_abs_diff(p, want) <= 1e-12, "projector matrix mismatch");
    c.require(max_abs_diff(p * p, p) <= 1e-12, "projector is not idempotent");
    c.require(max_abs_diff(p, p.dagger()) <= 1e-12, "projector is not self-adjoint");

    // full protocol: prepare |0>+|1> on the second wire, project, delete
    // the first wire
    auto protocol = [&](Phase cap_phase) {
        Diagram d(1, 1);
        VertexId spider = d.add_spider(VertexKind::Z, Phase());
        VertexId prep = d.add_spider(VertexKind::Z, Phase());
        VertexId cap = d.add_spider(VertexKind::Z, cap_phase);
        d.add_edge(d.inputs()[0], spider);
        d.add_edge(prep, spider);
        d.add_edge(spider, cap);
        d.add_edge(spider, d.outputs()[0]);
        return d;
    };
    c.require(equal_up_to_scalar(evaluate(protocol(Phase())),
                                 ComplexMatrix::identity(2), 1e-9),
              "transfer protocol is not the identity");
    c.require(equal_up_to_scalar(evaluate(protocol(Phase(1, 3))),
                                 rz(std::numbers::pi / 3), 1e-9),
              "decorated transfer protocol is not the phase gate");
}

void criterion_5_teleportation() {
    Criterion c(5, "teleportation branches");
    for (std::size_t i = 0; i < 4; ++i) {
        TeleportBranch tb = teleport_branch(i);
        Diagram closed = simplify(compose_seq(tb.branch, tb.correction));
        std::string tag = "branch " + std::to_string(i);
        c.require(isomorphic_up_to_scalar(closed, Diagram::identity(1)),
                  tag + " does not reduce to a wire");
        c.require(!closed.scalar().is_zero(), tag + " scalar vanished");
        c.require(equal_up_to_scalar(evaluate(closed), ComplexMatrix::identity(2), 1e-9),
                  tag + " is not proportional to the identity");
    }
}

void criterion_6_rule_soundness() {
    Criterion c(6, "rewrite rule soundness, 200 seeded trials per rule");
    for (RuleId rule: kAllRules) {
        auto report = check_rule_sound(rule, 200, 20240 + static_cast<int>(rule), 1e-9);
        c.require(report.applications > 0, rule_name(rule) + " was never exercised");
        c.require(report.failures.empty(),
                  rule_name(rule) + " failed " + std::to_string(report.failures.size()) +
                      " of " + std::to_string(report.applications) + " applications");
    }
}

void criterion_7_oracle_axioms() {
    Criterion c(7, "observable structure axiom suite");
    const double tol = 1e-9;

    auto four_predicates = [&](const StructurePair& p) {
        return std::array<bool, 4>{check_closed(p, tol).pass, check_oper_comm(p, tol).pass,
                                   check_comul_comm(p, tol).pass,
                                   check_bialg_comm(p, tol).pass};
    };
    auto agree = [](const std::array<bool, 4>& v) {
        return v[0] == v[1] && v[1] == v[2] && v[2] == v[3];
    };

    for (std::size_t d = 2; d <= 5; ++d) {
        StructurePair pair(standard_structure(d), obs_fourier(d));
        std::string tag = "standard/fourier d=" + std::to_string(d);
        c.require(check_observable_structure(pair.left, tol).pass &&
                      check_observable_structure(pair.right, tol).pass,
                  tag + ": structure axioms fail");
        c.require(check_complementary(pair, tol).pass, tag + ": not complementary");
        c.require(check_hopf(pair, d > 2, tol).pass, tag + ": hopf law fails");
        StructurePair coherent = coherify(pair);
        c.require(check_coherent(coherent, tol).pass, tag + ": not coherent");
        auto preds = four_predicates(pair);
        c.require(preds[0] && preds[1] && preds[2] && preds[3],
                  tag + ": closure conditions fail");
        c.require(agree(preds), tag + ": the four conditions disagree");
    }

    StructurePair f4_1(standard_structure(4), obs_from_hadamard(hadamard_f4(1.0)));
    c.require(check_complementary(f4_1, tol).pass, "F4(1): not complementary");
    c.require(check_coherent(f4_1, tol).pass, "F4(1): not coherent");
    auto bad = four_predicates(f4_1);
    c.require(!bad[0] && !bad[1] && !bad[2] && !bad[3],
              "F4(1): some closure condition unexpectedly holds");
    c.require(agree(bad), "F4(1): the four conditions disagree");

    for (double x: {0.0, std::numbers::pi / 3}) {
        StructurePair p(standard_structure(4), obs_from_hadamard(hadamard_f4(x)));
        c.require(agree(four_predicates(p)),
                  "F4(" + std::to_string(x) + "): the four conditions disagree");
    }
}

void criterion_8_phase_group() {
    Criterion c(8, "phase group and automorphism action");
    const double tol = 1e-9;

    auto group_suite = [&](const ObservableStructure& os, const std::string& tag) {
        auto grid = unbiased_grid(os, os.dim == 2 ? 16 : 256);
        const ComplexMatrix unit = os.deleting_point();
        double closure = 0.0;
        double inverse = 0.0;
        double lambda_mult = 0.0;
        double lambda_invol = 0.0;
        double lambda_recover = 0.0;
        const std::size_t samples = std::min<std::size_t>(grid.size(), 48);
        for (std::size_t i = 0; i < samples; ++i) {
            const auto& p = grid[i];
            const auto& q = grid[(i * 5 + 1) % grid.size()];
            ComplexMatrix prod = point_mult(p, q, os);
            double best = 1e300;
            for (const auto& r: grid) {
                best = std::min(best, max_abs_diff(prod, r));
            }
            closure = std::max(closure, best);
            inverse = std::max(
                inverse, max_abs_diff(point_mult(p, conjugate_point(p, os), os), unit));
            lambda_mult = std::max(
                lambda_mult, max_abs_diff(lambda_map(prod, os),
                                          lambda_map(p, os) * lambda_map(q, os)));
            lambda_invol = std::max(lambda_invol,
                                    max_abs_diff(lambda_map(conjugate_point(p, os), os),
                                                 lambda_map(p, os).dagger()));
            lambda_recover =
                std::max(lambda_recover, max_abs_diff(lambda_map(p, os) * unit, p));
        }
        c.require(closure <= tol, tag + ": grid not closed under the product");
        c.require(inverse <= tol, tag + ": conjugation is not the inverse");
        c.require(max_abs_diff(lambda_map(unit, os),
                               ComplexMatrix::identity(os.dim)) <= tol,
                  tag + ": unit does not map to the identity");
        c.require(lambda_mult <= tol, tag + ": lambda is not multiplicative");
        c.require(lambda_invol <= tol, tag + ": lambda does not respect involution");
        c.require(lambda_recover <= tol, tag + ": lambda is not injective on points");
    };
    group_suite(standard_structure(2), "qubit");
    group_suite(obs_fourier(3), "fourier d=3");

    StructurePair qubit(standard_structure(2), obs_fourier(2));
    c.require(check_automorphism(qubit, tol).pass, "qubit automorphism checks fail");
    StructurePair f3(standard_structure(3), obs_fourier(3));
    c.require(check_automorphism(f3, tol).pass, "fourier d=3 automorphism checks fail");

    // the nontrivial classical point negates phases: K|a> = e^{ia}|-a>
    ComplexMatrix k1(2, 1);
    k1.at(1, 0) = std::numbers::sqrt2;
    ComplexMatrix K = lambda_map(k1, obs_fourier(2));
    double exact = 0.0;
    for (int k = 0; k < 16; ++k) {
        const double a = 2.0 * std::numbers::pi * k / 16.0;
        ComplexMatrix pt(2, 1);
        pt.at(0, 0) = 1.0;
        pt.at(1, 0) = std::exp(C(0, a));
        ComplexMatrix neg(2, 1);
        neg.at(0, 0) = std::exp(C(0, a));
        neg.at(1, 0) = 1.0; // e^{ia} (|0> + e^{-ia}|1>)
        exact = std::max(exact, max_abs_diff(K * pt, neg));
    }
    c.require(exact <= 1e-12, "qubit action table is not reproduced exactly");
}

void criterion_9_cluster_equivalence() {
    Criterion c(9, "cluster state equivalence");

    // entangler form: four prepared points, cz along the path
    Diagram preps(0, 4);
    for (VertexId out: preps.outputs()) {
        VertexId z = preps.add_spider(VertexKind::Z, Phase());
        preps.add_edge(z, out);
    }
    Diagram cz_form =
        compose_seq(preps, circuit("qubits 4\ncz 0 1\ncz 1 2\ncz 2 3\n"));

    // fusion form: three two-qubit resource states merged pairwise
    Diagram fusion(0, 4);
    VertexId s1 = fusion.add_spider(VertexKind::Z, Phase());
    VertexId h1 = fusion.add_h();
    VertexId f2 = fusion.add_spider(VertexKind::Z, Phase());
    VertexId s2 = fusion.add_spider(VertexKind::Z, Phase());
    VertexId h2 = fusion.add_h();
    VertexId f3 = fusion.add_spider(VertexKind::Z, Phase());
    VertexId s3 = fusion.add_spider(VertexKind::Z, Phase());
    VertexId h3 = fusion.add_h();
    fusion.add_edge(s1, fusion.outputs()[0]);
    fusion.add_edge(s1, h1);
    fusion.add_edge(h1, f2);
    fusion.add_edge(s2, f2);
    fusion.add_edge(f2, fusion.outputs()[1]);
    fusion.add_edge(s2, h2);
    fusion.add_edge(h2, f3);
    fusion.add_edge(s3, f3);
    fusion.add_edge(f3, fusion.outputs()[2]);
    fusion.add_edge(s3, h3);
    fusion.add_edge(h3, fusion.outputs()[3]);

    Diagram a = simplify(cz_form, Strategy::Full);
    Diagram b = simplify(fusion, Strategy::Full);
    c.require(isomorphic_up_to_scalar(a, b),
              "the two cluster constructions reduce to different diagrams");
    c.require(equal_up_to_scalar(evaluate(cz_form), evaluate(fusion), 1e-9),
              "the two cluster constructions evaluate differently");
    // consistency with the direct graph-state builder
    Diagram g = simplify(graph_state({{0, 1}, {1, 2}, {2, 3}}, 4), Strategy::Full);
    c.require(isomorphic_up_to_scalar(a, g),
              "entangler form disagrees with the graph-state builder");
}

} // namespace

int main() {
    criterion_1_gate_algebra();
    criterion_2_fourier_simulation();
    criterion_3_one_way_verification();
    criterion_4_state_transfer();
    criterion_5_teleportation();
    criterion_6_rule_soundness();
    criterion_7_oracle_axioms();
    criterion_8_phase_group();
    criterion_9_cluster_equivalence();
    if (g_failures != 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
