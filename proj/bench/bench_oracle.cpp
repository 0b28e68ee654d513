#include <pcanon/orbits.hpp>

#include <benchmark/benchmark.h>

using namespace pcanon;
using namespace pcanon::oracle;

namespace {

OrbitProblem make(std::uint32_t p, std::size_t n, GroupKind g, Relation rel, MatrixClass cls) {
    OrbitProblem pb;
    pb.field = Field::prime(p);
    pb.n = n;
    pb.group = g;
    pb.relation = rel;
    pb.matrix_class = cls;
    return pb;
}

const OrbitProblem& problem(int which) {
    static const OrbitProblem problems[] = {
        make(2, 4, GroupKind::B, Relation::Equivalence, MatrixClass::All),         // bit-packed kernel
        make(3, 3, GroupKind::B, Relation::Equivalence, MatrixClass::All),
        make(3, 4, GroupKind::B, Relation::Congruence, MatrixClass::Symmetric),
    };
    return problems[which];
}

void BM_Serial(benchmark::State& state) {
    const auto& pb = problem(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_orbits_serial(pb));
}

void BM_Parallel(benchmark::State& state) {
    const auto& pb = problem(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_orbits_parallel(pb, 0));
}

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
