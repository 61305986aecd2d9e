#include <benchmark/benchmark.h>

#include <string>

#include "pursuit/cover.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/toroidal.hpp"

using namespace pursuit;

namespace {

TorusEmbedding fixture(const std::string& rel) { return load_torus_embedding(std::string(PURSUIT_FIXTURES) + "/" + rel); }

void BM_SolveDodecahedron(benchmark::State& state) {
  const Graph g = fixture("planar/dodecahedron.tor").graph();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_game(g, k).game_value());
}
BENCHMARK(BM_SolveDodecahedron)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SolvePetersen3(benchmark::State& state) {
  const Graph g = fixture("torus/petersen.tor").graph();
  for (auto _ : state) benchmark::DoNotOptimize(solve_game(g, 3).game_value());
}
BENCHMARK(BM_SolvePetersen3)->Unit(benchmark::kMillisecond);

void BM_CoverWindow(benchmark::State& state) {
  const auto emb = fixture("torus/petersen.tor");
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_cover_window(emb, 0, r).size());
}
BENCHMARK(BM_CoverWindow)->Arg(20)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_ChooseD(benchmark::State& state) {
  const auto emb = fixture("torus/c4xc4.tor");
  for (auto _ : state) benchmark::DoNotOptimize(choose_D(emb, 0).D);
}
BENCHMARK(BM_ChooseD)->Unit(benchmark::kMillisecond);

void BM_WindowBfs(benchmark::State& state) {
  const auto w = build_cover_window(fixture("torus/petersen.tor"), 0, 151);
  for (auto _ : state) benchmark::DoNotOptimize(bfs(w.graph(), w.center()).dist.back());
  state.SetItemsProcessed(state.iterations() * w.size());
}
BENCHMARK(BM_WindowBfs)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
