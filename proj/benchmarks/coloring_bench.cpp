#include <benchmark/benchmark.h>

#include "totalchroma/equitable.hpp"
#include "totalchroma/generators.hpp"
#include "totalchroma/totalizer.hpp"

namespace totalchroma {
namespace {

void BM_VizingEdgeColoring(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const Graph g = gen_gnp(n, 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(vizing_edge_coloring(g));
  state.SetItemsProcessed(state.iterations() * g.num_edges());
}
BENCHMARK(BM_VizingEdgeColoring)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_EquitableVertexColoring(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const Graph g = gen_gnp(n, 0.5, 2);
  const auto k = static_cast<Color>(g.max_degree()) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(equitable_vertex_coloring(g, k));
}
BENCHMARK(BM_EquitableVertexColoring)->Arg(100)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_BalanceMissing(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const Graph g = gen_random_regular(n, n / 2, 3);
  const PartialEdgeColoring base = vizing_edge_coloring(g, static_cast<Color>(n / 2 + 3));
  for (auto _ : state) {
    PartialEdgeColoring phi = base;
    benchmark::DoNotOptimize(balance_missing(phi, {}));
  }
}
BENCHMARK(BM_BalanceMissing)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_TotalColorGeneral(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const Graph g = gen_gnp(n, 0.2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(total_color_general(g));
}
BENCHMARK(BM_TotalColorGeneral)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace totalchroma
