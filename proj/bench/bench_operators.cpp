// Reference (serial, definitional) operators against the tabulated Lattice.

#include <benchmark/benchmark.h>

#include "finitop/kernels.hpp"
#include "finitop/lattice.hpp"
#include "finitop/reference.hpp"
#include "finitop/zoo.hpp"

using namespace finitop;

namespace {

Space bench_space(int n) { return random_space(n, 1234 + n, 0.25); }

void reference_closure_all(benchmark::State& state) {
    const Space s = bench_space(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Mask acc = 0;
        for (Mask a = 0; a <= s.full(); ++a) acc ^= reference::closure(s, a);
        benchmark::DoNotOptimize(acc);
    }
}

void lattice_closure_all(benchmark::State& state) {
    const Space s = bench_space(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const Lattice lat(s);
        Mask acc = 0;
        for (Mask a = 0; a <= s.full(); ++a) acc ^= lat.closure(a);
        benchmark::DoNotOptimize(acc);
    }
}

void reference_etheta_family(benchmark::State& state) {
    const Space s = bench_space(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::theta_open_family(s, ThetaKind::EStarTheta));
}

void lattice_etheta_family(benchmark::State& state) {
    const Space s = bench_space(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const Lattice lat(s);
        benchmark::DoNotOptimize(lat.etheta_open().count());
    }
}

void reference_estar_family(benchmark::State& state) {
    const Space s = bench_space(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::kind_family(s, Kind::EStar));
}

void lattice_estar_family(benchmark::State& state) {
    const Space s = bench_space(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const Lattice lat(s);
        benchmark::DoNotOptimize(lat.family(Kind::EStar).count());
    }
}

}  // namespace

BENCHMARK(reference_closure_all)->DenseRange(4, 8, 2);
BENCHMARK(lattice_closure_all)->DenseRange(4, 12, 2);
BENCHMARK(reference_etheta_family)->DenseRange(3, 6, 1);
BENCHMARK(lattice_etheta_family)->DenseRange(3, 10, 1);
BENCHMARK(reference_estar_family)->DenseRange(3, 6, 1);
BENCHMARK(lattice_estar_family)->DenseRange(3, 10, 1);

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::AddCustomContext("omp_threads", std::to_string(kernels::thread_count()));
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
