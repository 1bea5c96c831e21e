// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "bench_inputs.hpp"
#include "hlsdse/design_space.hpp"
#include "hlsdse/ds_generator.hpp"
#include "hlsdse/dsl.hpp"

namespace hlsdse {
namespace {

void BM_ParseGeneratedSpace(benchmark::State& state) {
  const std::string text = serialize_design_space(generate_design_space(bench::fixture_kernel("gemm.kernel")));
  for (auto _ : state) benchmark::DoNotOptimize(parse_design_space(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseGeneratedSpace);

void BM_GenerateSpace(benchmark::State& state) {
  const KernelModel k = bench::fixture_kernel("gemm.kernel");
  for (auto _ : state) benchmark::DoNotOptimize(generate_design_space(k));
}
BENCHMARK(BM_GenerateSpace);

// Conditional option lists are re-evaluated per config.
void BM_ValidateDefault(benchmark::State& state) {
  const DesignSpace ds = generate_design_space(bench::fixture_kernel("gemm.kernel"));
  const Config cfg = *default_config(ds);
  for (auto _ : state) benchmark::DoNotOptimize(validate(ds, cfg));
}
BENCHMARK(BM_ValidateDefault);

void BM_CountValid(benchmark::State& state) {
  const DesignSpace ds = generate_design_space(bench::fixture_kernel("quirk.kernel"));
  for (auto _ : state) benchmark::DoNotOptimize(count_valid(ds, 1'000'000));
}
BENCHMARK(BM_CountValid)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hlsdse
