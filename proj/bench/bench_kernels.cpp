// Serial reference vs OpenMP for the grid kernels. Compare the /0 (serial)
// and /1 (parallel) rows; on a single core they should match closely.

#include "sharpmeans/analysis.hpp"
#include "sharpmeans/sharp_constants.hpp"
#include "sharpmeans/verifier.hpp"

#include <benchmark/benchmark.h>

using namespace sharpmeans;

namespace {

const PrecisionContext kCtx(128);

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_MapLogRatio(benchmark::State& state) {
  const Interval iv = default_scan_interval(kCtx.bits());
  const auto xs = endpoint_weighted_grid(iv.lo, iv.hi, static_cast<int>(state.range(1)));
  const Real p = lower_power_exponent(kCtx);
  for (auto _ : state) {
    auto out = map_grid(xs, [&](const Real& x) { return log_ratio(p, x, kCtx).value; }, mode(state));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_MapLogRatio)->ArgsProduct({{0, 1}, {1000, 10000}})->Unit(benchmark::kMillisecond);

void BM_SignScanKernel(benchmark::State& state) {
  const PrecisionContext ctx = kCtx.with_scan_points(static_cast<int>(state.range(1)));
  const AuxFunctionId id{AuxTag::Kernel1, lower_power_exponent(kCtx)};
  for (auto _ : state) {
    SignProfile profile = sign_scan(id, ctx, mode(state));
    benchmark::DoNotOptimize(profile.crossings.data());
  }
}
BENCHMARK(BM_SignScanKernel)->ArgsProduct({{0, 1}, {1000, 10000}})->Unit(benchmark::kMillisecond);

void BM_VerifyChain(benchmark::State& state) {
  const Real edge = kCtx.parse("1e-6");
  const auto pairs = unit_pairs(edge, 1L - edge, static_cast<int>(state.range(1)));
  const ChainSpec chain = power_refined_chain(kCtx);
  for (auto _ : state) {
    VerificationReport r = verify_chain(chain, pairs, kCtx, mode(state));
    benchmark::DoNotOptimize(r.min_margin);
  }
}
BENCHMARK(BM_VerifyChain)->ArgsProduct({{0, 1}, {500}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
