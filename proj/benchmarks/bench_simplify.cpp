#include <benchmark/benchmark.h>

#include "zx/circuit.hpp"
#include "zx/simplify.hpp"

namespace {

void BM_SimplifyCnotChain(benchmark::State& state) {
    zx::Circuit c;
    c.n_qubits = 2;
    for (int i = 0; i < state.range(0); ++i) {
        c.gates.push_back({zx::Gate::Kind::CNOT, 0, 1});
    }
    zx::Diagram d = zx::compile_circuit(c);
    for (auto _: state) {
        auto out = zx::simplify(d);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_SimplifyCnotChain)->Arg(4)->Arg(16)->Arg(64);

void BM_SimplifyRandomFull(benchmark::State& state) {
    zx::Diagram d = zx::random_diagram(static_cast<std::uint64_t>(state.range(0)));
    for (auto _: state) {
        auto out = zx::simplify(d, zx::Strategy::Full);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_SimplifyRandomFull)->Arg(7)->Arg(99)->Arg(12345);

void BM_FindMatchesAllRules(benchmark::State& state) {
    zx::Diagram d = zx::random_diagram(static_cast<std::uint64_t>(state.range(0)));
    for (auto _: state) {
        for (zx::RuleId rule: zx::kAllRules) {
            auto ms = zx::find_matches(d, rule);
            benchmark::DoNotOptimize(ms);
        }
    }
}
BENCHMARK(BM_FindMatchesAllRules)->Arg(7)->Arg(99);

} // namespace
