#include <benchmark/benchmark.h>

#include "totalchroma/generators.hpp"
#include "totalchroma/totalizer.hpp"

namespace totalchroma {
namespace {

void BM_PipelineStepsZeroToOne(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const Vertex r = 7 * n / 10;
  const Graph g = gen_random_regular(n, r, 5);
  const double eps = 2.0 * r / n - 1.0;
  for (auto _ : state) {
    DenseRegularPipeline p(g, eps, PipelineMode::kOpportunistic, 5);
    benchmark::DoNotOptimize(p.step0() && p.step1());
  }
}
BENCHMARK(BM_PipelineStepsZeroToOne)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_DenseRegularEndToEnd(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const Vertex r = 7 * n / 10;
  const Graph g = gen_random_regular(n, r, 6);
  const double eps = 2.0 * r / n - 1.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(total_color_dense_regular(g, eps, PipelineMode::kOpportunistic, 6));
}
BENCHMARK(BM_DenseRegularEndToEnd)->Arg(500)->Iterations(1)->Unit(benchmark::kSecond);

}  // namespace
}  // namespace totalchroma
