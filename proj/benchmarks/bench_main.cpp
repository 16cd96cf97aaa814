#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "disksssp/grid.hpp"
#include "disksssp/oracle.hpp"
#include "disksssp/quadtree.hpp"
#include "disksssp/sssp_arbitrary.hpp"
#include "disksssp/sssp_bounded.hpp"
#include "disksssp/update_engine.hpp"
#include "generators.hpp"

using namespace disksssp;

namespace {

DiskInstance make(const std::string& kind, int n, double psi, std::uint64_t seed,
                  double side = 100.0) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.psi = psi;
  spec.side = side;
  spec.seed = seed;
  return generate(spec);
}

// Area proportional to n keeps the expected degree constant as n grows, so
// the timings measure the structures rather than a densifying graph.
double scaled_side(int n) { return 10.0 * std::sqrt(static_cast<double>(n)); }

}  // namespace

static void BM_GridBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DiskInstance inst = make("uniform-square", n, 64.0, 42, scaled_side(n));
  for (auto _ : state) {
    GridIndex grid;
    grid.build(inst);
    grid.compute_larger_lists(inst);
    benchmark::DoNotOptimize(grid.cell_count());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_GridBuild)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

static void BM_QuadtreeBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DiskInstance inst = make("uniform-square", n, 1048576.0, 42, scaled_side(n));
  for (auto _ : state) {
    QuadtreePaths qt;
    qt.build(inst);
    benchmark::DoNotOptimize(qt.node_count());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_QuadtreeBuild)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Complexity();

static void BM_SolveBounded(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DiskInstance inst = make("uniform-square", n, 64.0, 7, scaled_side(n));
  for (auto _ : state) {
    SsspResult res = solve_bounded(inst);
    benchmark::DoNotOptimize(res.dist.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveBounded)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

// Dense worst case for edge-by-edge relaxation: m = n(n-1)/2, while the
// batched solver touches each cell family once.
static void BM_SolveBoundedClique(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DiskInstance inst = make("clique", n, 4.0, 7);
  for (auto _ : state) {
    SsspResult res = solve_bounded(inst);
    benchmark::DoNotOptimize(res.dist.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveBoundedClique)
    ->RangeMultiplier(2)
    ->Range(1 << 12, 1 << 15)
    ->Complexity()
    ->Unit(benchmark::kMillisecond);

static void BM_SolveArbitrary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DiskInstance inst = make("uniform-square", n, 1048576.0, 7, scaled_side(n));
  for (auto _ : state) {
    SsspResult res = solve_arbitrary(inst);
    benchmark::DoNotOptimize(res.dist.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveArbitrary)
    ->RangeMultiplier(4)
    ->Range(1 << 10, 1 << 14)
    ->Complexity()
    ->Unit(benchmark::kMillisecond);

static void BM_SolveOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DiskInstance inst = make("uniform-square", n, 64.0, 7, scaled_side(n));
  for (auto _ : state) {
    SsspResult res = solve_oracle(inst);
    benchmark::DoNotOptimize(res.dist.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveOracle)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Complexity();

static void BM_UpdateBatch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DiskInstance inst = make("uniform-square", n, 16.0, 11, scaled_side(n));
  std::mt19937_64 rng(13);
  std::vector<LabeledVertex> U;
  std::vector<int> V;
  for (int v = 0; v < n; ++v) {
    if (rng() % 2)
      U.push_back(label(inst.vertices[v], (rng() >> 11) * 0x1.0p-53 * 100.0));
    else
      V.push_back(v);
  }
  std::vector<double> dist;
  std::vector<int> prev;
  for (auto _ : state) {
    dist.assign(n, kInf);
    prev.assign(n, -1);
    update(U, V, inst.vertices, dist, prev);
    benchmark::DoNotOptimize(dist.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_UpdateBatch)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

BENCHMARK_MAIN();
