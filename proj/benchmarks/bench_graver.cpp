#include <benchmark/benchmark.h>

#include "toric/corpus.hpp"
#include "toric/graph_circuits.hpp"
#include "toric/graph_graver.hpp"
#include "toric/matrix_circuits.hpp"
#include "toric/pottier.hpp"

namespace {

// chain of k triangles joined by bridges: the walk degree grows linearly
toric::Graph triangle_chain(int k) {
  toric::Graph g;
  g.vertex_count = 3 * k;
  for (int i = 0; i < k; ++i) {
    int b = 3 * i;
    g.edges.emplace_back(b, b + 1);
    g.edges.emplace_back(b + 1, b + 2);
    g.edges.emplace_back(b + 2, b);
    if (i + 1 < k) g.edges.emplace_back(b + 2, b + 3);
  }
  return g;
}

toric::Graph random_graph(int seed) {
  toric::Rng rng(static_cast<std::uint64_t>(seed));
  return toric::random_connected_multigraph(rng, 7, 10);
}

void BM_PottierGraver(benchmark::State& state) {
  auto g = triangle_chain(static_cast<int>(state.range(0)));
  auto A = toric::incidence_matrix(g);
  for (auto _ : state) {
    auto basis = toric::graver_basis(A);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_PottierGraver)->DenseRange(1, 4);

void BM_GraphGraver(benchmark::State& state) {
  auto g = triangle_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto basis = toric::graver_basis_graph(g);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_GraphGraver)->DenseRange(1, 4);

void BM_CircuitEnumeration(benchmark::State& state) {
  auto g = random_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto witnesses = toric::enumerate_circuit_witnesses(g);
    benchmark::DoNotOptimize(witnesses);
  }
}
BENCHMARK(BM_CircuitEnumeration)->DenseRange(1, 8);

void BM_MatrixCircuits(benchmark::State& state) {
  auto g = random_graph(static_cast<int>(state.range(0)));
  auto A = toric::incidence_matrix(g);
  for (auto _ : state) {
    auto circuits = toric::circuits_of_matrix(A);
    benchmark::DoNotOptimize(circuits);
  }
}
BENCHMARK(BM_MatrixCircuits)->DenseRange(1, 8);

}  // namespace

BENCHMARK_MAIN();
