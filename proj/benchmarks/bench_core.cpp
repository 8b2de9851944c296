#include <benchmark/benchmark.h>

#include <random>

#include "fibsum/automorphism.hpp"
#include "fibsum/bipartition.hpp"
#include "fibsum/decomposition.hpp"
#include "fibsum/graph.hpp"

namespace {

void NeighborsImplicit(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  const fibsum::FibSumGraph g(n);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(1, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.neighbors(dist(rng)));
  }
}
BENCHMARK(NeighborsImplicit)->Range(1 << 10, 1 << 24);

void DegreeClosedForm(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(1, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fibsum::degree_closed_form(n, dist(rng)));
  }
}
BENCHMARK(DegreeClosedForm)->Range(1 << 10, 1 << 24);

void EdgeCountClosedForm(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(1, fibsum::max_vertex_count());
  for (auto _ : state) {
    benchmark::DoNotOptimize(fibsum::edge_count_closed_form(dist(rng)));
  }
}
BENCHMARK(EdgeCountClosedForm);

void ColourOf(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(1, fibsum::max_vertex_count());
  for (auto _ : state) {
    benchmark::DoNotOptimize(fibsum::colour_of(dist(rng)));
  }
}
BENCHMARK(ColourOf);

void PartSizesRecursive(benchmark::State& state) {
  const std::uint64_t n = fibsum::imbalance_witness(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fibsum::part_sizes(n));
  }
}
BENCHMARK(PartSizesRecursive);

void MaterializeEdges(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    fibsum::FibSumGraph g(n);
    benchmark::DoNotOptimize(g.edges().size());
  }
}
BENCHMARK(MaterializeEdges)->Range(1 << 10, 1 << 18);

void BuildTreeDecomposition(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fibsum::build_tree_decomposition(n).bags.size());
  }
}
BENCHMARK(BuildTreeDecomposition)->Range(1 << 10, 1 << 16);

void BuildOuterplanarCertificate(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fibsum::build_outerplanar_certificate(n).order.size());
  }
}
BENCHMARK(BuildOuterplanarCertificate)->Range(1 << 10, 1 << 16);

void AutClosedForm(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(34, fibsum::max_vertex_count());
  for (auto _ : state) {
    benchmark::DoNotOptimize(fibsum::aut_closed_form(dist(rng)));
  }
}
BENCHMARK(AutClosedForm);

}  // namespace

BENCHMARK_MAIN();
