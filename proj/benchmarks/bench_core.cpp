#include <benchmark/benchmark.h>

#include "centroflow/centroflow.hpp"

namespace {

using namespace centroflow;

void SignatureComputation3D(benchmark::State& state) {
  Rng rng(42);
  const Polygon poly =
      random_admissible_polygon(rng, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Signature sig = compute_signature(poly);
    benchmark::DoNotOptimize(sig);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(SignatureComputation3D)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void ChainClosureCheck(benchmark::State& state) {
  Rng rng(43);
  const Polygon poly =
      random_admissible_polygon(rng, 3, static_cast<int>(state.range(0)));
  const Signature sig = compute_signature(poly);
  for (auto _ : state) {
    ClosureReport report = closure_check(sig);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(ChainClosureCheck)->RangeMultiplier(4)->Range(8, 512);

void ReconstructRoundtrip(benchmark::State& state) {
  Rng rng(44);
  const Polygon poly =
      random_admissible_polygon(rng, 3, static_cast<int>(state.range(0)));
  const Signature sig = compute_signature(poly);
  const auto seed = ReconstructionSeed::from_polygon(poly);
  for (auto _ : state) {
    Polygon rebuilt = reconstruct(seed, sig, poly.size() - 3);
    benchmark::DoNotOptimize(rebuilt);
  }
}
BENCHMARK(ReconstructRoundtrip)->RangeMultiplier(4)->Range(8, 512);

void ProportionalStep(benchmark::State& state) {
  Rng rng(45);
  const Polygon poly =
      random_admissible_polygon(rng, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    FlowStep step = proportional_step(poly, 0.4);
    benchmark::DoNotOptimize(step);
  }
}
BENCHMARK(ProportionalStep)->RangeMultiplier(4)->Range(8, 512);

void PentagramStep(benchmark::State& state) {
  Rng rng(46);
  const Polygon poly = random_convex_polygon(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    FlowStep step = pentagram_step(poly);
    benchmark::DoNotOptimize(step);
  }
}
BENCHMARK(PentagramStep)->RangeMultiplier(2)->Range(8, 64);

void PlanarityBetas(benchmark::State& state) {
  Rng rng(47);
  const Polygon poly =
      random_planar_closed_polygon3(rng, static_cast<int>(state.range(0)));
  const Signature sig = compute_signature(poly);
  const TransversalRecipe recipe = TransversalRecipe::mean_curvatures();
  for (auto _ : state) {
    std::vector<double> betas = planarity_betas(sig, poly, recipe);
    benchmark::DoNotOptimize(betas);
  }
}
BENCHMARK(PlanarityBetas)->RangeMultiplier(2)->Range(8, 64);

void MatchPolygons3D(benchmark::State& state) {
  Rng rng(48);
  const Polygon p =
      random_admissible_polygon(rng, 3, static_cast<int>(state.range(0)));
  Mat3 a;
  a << 2, 1, 0, -1, 1, 3, 0, 2, 1;
  const Polygon q = p.transformed(a);
  for (auto _ : state) {
    MatchReport report = match_polygons(p, q, MatchMode::centroaffine3);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(MatchPolygons3D)->RangeMultiplier(4)->Range(8, 128);

}  // namespace

BENCHMARK_MAIN();
