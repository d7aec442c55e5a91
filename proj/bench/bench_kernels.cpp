// OpenMP kernels against their serial reference.
//
//   ./build/bench/fbmkl_bench --benchmark_filter=Assemble

#include <benchmark/benchmark.h>

#include "fbmkl/estimator.hpp"
#include "fbmkl/expansion.hpp"
#include "fbmkl/galerkin.hpp"
#include "fbmkl/projection.hpp"

namespace {

using fbmkl::Exec;

void BM_Assemble(benchmark::State& state, Exec exec) {
  const fbmkl::HurstParams params(0.3);
  const int size = static_cast<int>(state.range(0));
  const fbmkl::QuadratureSpec quad = fbmkl::default_quadrature(size);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fbmkl::assemble_on_rule(params, size, quad, exec));
  }
}

const fbmkl::ExpansionSpec& spec_h07() {
  static const fbmkl::ExpansionSpec spec = fbmkl::build_expansion(fbmkl::HurstParams(0.7), 2000);
  return spec;
}

void BM_ProjectionTable(benchmark::State& state, Exec exec) {
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fbmkl::build_projection(spec_h07(), size, fbmkl::Remainder::lumped, exec));
  }
}

void BM_ProjectedMoments(benchmark::State& state, Exec exec) {
  const fbmkl::ProjectionTable table =
      fbmkl::build_projection(spec_h07(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fbmkl::projected_moments(table, exec));
}

void BM_SamplePaths(benchmark::State& state, Exec exec) {
  static const fbmkl::ExpansionSpec spec =
      fbmkl::build_expansion(fbmkl::HurstParams(0.7), fbmkl::kSamplingTerms);
  const std::vector<double> grid = fbmkl::uniform_grid(256);
  const int count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fbmkl::sample_paths(spec, grid, count, 0, exec));
}

BENCHMARK_CAPTURE(BM_Assemble, serial, Exec::serial)->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(BM_Assemble, parallel, Exec::parallel)->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(BM_ProjectionTable, serial, Exec::serial)->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_ProjectionTable, parallel, Exec::parallel)->Arg(64)->Arg(256);
BENCHMARK_CAPTURE(BM_ProjectedMoments, serial, Exec::serial)->Arg(64);
BENCHMARK_CAPTURE(BM_ProjectedMoments, parallel, Exec::parallel)->Arg(64);
BENCHMARK_CAPTURE(BM_SamplePaths, serial, Exec::serial)->Arg(400);
BENCHMARK_CAPTURE(BM_SamplePaths, parallel, Exec::parallel)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
