#include <benchmark/benchmark.h>

#include "zx/observable.hpp"

namespace {

zx::ObservableStructure standard_structure(std::size_t d) {
    std::vector<zx::ComplexMatrix> basis;
    for (std::size_t i = 0; i < d; ++i) {
        zx::ComplexMatrix v(d, 1);
        v.at(i, 0) = 1.0;
        basis.push_back(v);
    }
    return zx::obs_from_basis(basis);
}

void BM_StructureAxioms(benchmark::State& state) {
    auto os = zx::obs_fourier(static_cast<std::size_t>(state.range(0)));
    for (auto _: state) {
        auto rep = zx::check_observable_structure(os);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_StructureAxioms)->Arg(2)->Arg(4)->Arg(8);

void BM_ClosureChecks(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    zx::StructurePair pair(standard_structure(d), zx::obs_fourier(d));
    for (auto _: state) {
        auto rep = zx::check_closed(pair);
        benchmark::DoNotOptimize(rep);
        auto rep2 = zx::check_bialg_comm(pair);
        benchmark::DoNotOptimize(rep2);
    }
}
BENCHMARK(BM_ClosureChecks)->Arg(2)->Arg(3)->Arg(5);

} // namespace
