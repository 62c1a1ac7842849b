#include <benchmark/benchmark.h>

#include "zx/circuit.hpp"
#include "zx/evaluate.hpp"
#include "zx/simplify.hpp"

#include <string>

namespace {

zx::Circuit cnot_ladder(std::size_t qubits, std::size_t layers) {
    zx::Circuit c;
    c.n_qubits = qubits;
    for (std::size_t l = 0; l < layers; ++l) {
        c.gates.push_back({zx::Gate::Kind::H, l % qubits});
        for (std::size_t q = 0; q + 1 < qubits; ++q) {
            c.gates.push_back({zx::Gate::Kind::CNOT, q, q + 1});
        }
    }
    return c;
}

void BM_EvaluateLadder(benchmark::State& state) {
    const auto qubits = static_cast<std::size_t>(state.range(0));
    zx::Diagram d = zx::compile_circuit(cnot_ladder(qubits, 4));
    for (auto _: state) {
        auto m = zx::evaluate(d);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_EvaluateLadder)->Arg(2)->Arg(4)->Arg(6);

void BM_EvaluateRandom(benchmark::State& state) {
    zx::Diagram d = zx::random_diagram(static_cast<std::uint64_t>(state.range(0)));
    for (auto _: state) {
        auto m = zx::evaluate(d);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_EvaluateRandom)->Arg(11)->Arg(42)->Arg(1000);

} // namespace
