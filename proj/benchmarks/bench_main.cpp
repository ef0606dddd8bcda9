#include <benchmark/benchmark.h>

#include <vector>

#include "nms/classifier.hpp"
#include "nms/gluing.hpp"
#include "nms/oracle.hpp"
#include "nms/portrait.hpp"
#include "nms/simulator.hpp"

namespace {

nms::ModelFlow lens_flow(int r, int p, int s, int q) {
  return nms::ModelFlow::make(3, nms::HandleKind::Orientable,
                              nms::GluingMatrix{r, p, s, q});
}

static void BM_FlowsEquivalentMatrixPair(benchmark::State& state) {
  const auto a = lens_flow(1, 7, 0, 1);
  const auto b = lens_flow(8, 7, 1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nms::flows_equivalent(a, b));
  }
}
BENCHMARK(BM_FlowsEquivalentMatrixPair);

static void BM_SearchCertificate(benchmark::State& state) {
  const auto a = lens_flow(1, 7, 0, 1);
  const auto b = lens_flow(8, 7, 1, 1);
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nms::oracle::search_certificate(a, b, bound));
  }
}
BENCHMARK(BM_SearchCertificate)->Arg(1)->Arg(8);

static void BM_EnumerateUnimodular(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nms::unimodular_matrices(bound));
  }
}
BENCHMARK(BM_EnumerateUnimodular)->Arg(1)->Arg(3);

static void BM_PartitionLensFlows(benchmark::State& state) {
  std::vector<nms::ModelFlow> flows;
  for (const auto& m : nms::unimodular_matrices(2))
    flows.push_back(nms::ModelFlow::make(3, nms::HandleKind::Orientable, m));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nms::oracle::partition_by_equivalence(flows));
  }
  state.SetItemsProcessed(state.iterations() * flows.size());
}
BENCHMARK(BM_PartitionLensFlows);

static void BM_ModelFlowTransit(benchmark::State& state) {
  const auto f = nms::ModelFlow::make(
      2, nms::HandleKind::Orientable,
      nms::SurfaceGluing::orientable(false, +1, +1));
  const nms::ChartPoint seed{nms::Chart::Repeller, {0.18}, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(nms::model_flow(f, seed, 6.0));
  }
}
BENCHMARK(BM_ModelFlowTransit);

static void BM_SampleTrajectory(benchmark::State& state) {
  const auto f = nms::ModelFlow::make(
      2, nms::HandleKind::Orientable,
      nms::SurfaceGluing::orientable(false, +1, +1));
  const nms::ChartPoint seed{nms::Chart::Repeller, {0.18}, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(nms::sample_trajectory(f, seed, 16.0, 0.05));
  }
}
BENCHMARK(BM_SampleTrajectory);

static void BM_TorusPortrait(benchmark::State& state) {
  const auto f = nms::ModelFlow::make(
      2, nms::HandleKind::Orientable,
      nms::SurfaceGluing::orientable(false, +1, +1));
  const auto seeds = nms::default_portrait_seeds(f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nms::render_surface_portrait(f, seeds, 16.0, 0.05));
  }
}
BENCHMARK(BM_TorusPortrait);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
